#ifndef EEE_ENUMERATORS_HPP
#define EEE_ENUMERATORS_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "eee/kernel_entropy.hpp"
#include "eee/spectrum.hpp"

namespace eee {

enum class EnumMethod {
    eee_tail,
    eee_head,
    aic,
    mdl,
};

std::string_view method_name(EnumMethod method); // "eee-tail", "eee-head", "aic", "mdl"
std::optional<EnumMethod> parse_method(std::string_view name);

struct EstimateResult {
    EnumMethod method;
    int num_sources = 0;           // estimated source count
    std::vector<double> criterion; // scanned objective, for diagnostics
};

/// Entropy-of-eigenvalues criterion, tail form: argmin over i = 1..P-1 of the
/// first difference of the tail entropy profile. Ties go to the smallest i.
/// Cannot return 0; noise-only inputs yield 1.
EstimateResult eee_tail(const EigenSpectrum& spectrum, const KernelConfig& kernel);

/// Head form: argmax over i = 1..P-1 of the first difference of the head
/// entropy profile (global bandwidth). Ties go to the smallest i.
EstimateResult eee_head(const EigenSpectrum& spectrum, const KernelConfig& kernel);

/// AIC(k) = -2N(P-k) log(g_k/a_k) + 2k(2P-k) over k = 0..P-1, where g_k and
/// a_k are the geometric and arithmetic means of the P-k smallest eigenvalues
/// (floored at 1e-30 before logs). Complex-data penalty.
EstimateResult aic(const EigenSpectrum& spectrum, int num_snapshots);

/// MDL(k) = -N(P-k) log(g_k/a_k) + 0.5 k(2P-k) log N, same scan and floor.
EstimateResult mdl(const EigenSpectrum& spectrum, int num_snapshots);

/// Dispatch by method tag.
EstimateResult estimate(EnumMethod method, const EigenSpectrum& spectrum,
                        const KernelConfig& kernel, int num_snapshots);

} // namespace eee

#endif
