#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "eee/csv_report.hpp"

using namespace eee;

namespace {

SweepPoint sample_point()
{
    SweepPoint point;
    point.axis_value = 100.0;
    point.point_seed = 777;
    TrialBatchStats tail;
    tail.method = EnumMethod::eee_tail;
    tail.trials = 8;
    tail.correct = 6;
    tail.false_alarms = 1;
    tail.missed = 1;
    tail.p_detect = 0.75;
    tail.p_false_alarm = 0.125;
    tail.p_missed = 0.125;
    TrialBatchStats akaike = tail;
    akaike.method = EnumMethod::aic;
    point.stats = {tail, akaike}; // deliberately unsorted
    return point;
}

} // namespace

TEST_CASE("sweep CSV layout: header, method order, formatting")
{
    const std::string csv = format_sweep_csv(SweepAxis::snapshots, {sample_point()});
    CHECK(csv == "axis,axis_value,method,trials,p_detect,p_fa,p_missed,seed\n"
                 "snapshots,100,aic,8,0.750000,0.125000,0.125000,777\n"
                 "snapshots,100,eee-tail,8,0.750000,0.125000,0.125000,777\n");
}

TEST_CASE("axis values keep compact general formatting")
{
    auto point = sample_point();
    point.axis_value = 0.01;
    point.stats.resize(1);
    const std::string csv = format_sweep_csv(SweepAxis::epsilon, {point});
    CHECK(csv.find("epsilon,0.01,") != std::string::npos);
}

TEST_CASE("spectrum CSV leaves the last difference empty")
{
    const std::vector<double> values{3.0, 2.0, 1.0};
    const std::vector<double> profile{0.5, 0.25, 0.125};
    const std::vector<double> delta{-0.25, -0.125};
    const std::string csv = format_spectrum_csv(values, profile, delta);
    CHECK(csv == "index,eigenvalue,f,delta_f\n"
                 "1,3,0.5,-0.25\n"
                 "2,2,0.25,-0.125\n"
                 "3,1,0.125,\n");
    CHECK_THROWS_AS(format_spectrum_csv(values, profile, {}), std::invalid_argument);
}

TEST_CASE("atomic write replaces the target and leaves no temp file")
{
    const auto dir = std::filesystem::temp_directory_path() / "eee_csv_test";
    std::filesystem::create_directories(dir);
    const auto target = dir / "out.csv";

    write_file_atomic(target, "one\n");
    write_file_atomic(target, "two\n");
    std::ifstream stream(target);
    std::string content((std::istreambuf_iterator<char>(stream)),
                        std::istreambuf_iterator<char>());
    CHECK(content == "two\n");
    CHECK(!std::filesystem::exists(target.string() + ".tmp"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("manifest carries the run description")
{
    RunManifest manifest;
    manifest.config_path = "configs/fig1.conf";
    manifest.output_path = "out.csv";
    manifest.axis = SweepAxis::snapshots;
    manifest.points = 5;
    manifest.methods = {EnumMethod::mdl, EnumMethod::eee_tail};
    manifest.trials_per_point = 1000;
    manifest.master_seed = 42;
    manifest.workers = 4;
    manifest.emitted_rows = 10;

    const std::string text = format_manifest(manifest);
    CHECK(text.find("tool=eee_bench 0.1.0\n") != std::string::npos);
    CHECK(text.find("schema=1\n") != std::string::npos);
    CHECK(text.find("methods=eee-tail,mdl\n") != std::string::npos);
    CHECK(text.find("emitted_rows=10\n") != std::string::npos);
    CHECK(text.find("master_seed=42\n") != std::string::npos);
}
