#include <doctest.h>

#include <algorithm>
#include <json.hpp>
#include <string>
#include <vector>

#include "cipp/artifacts.hpp"
#include "cipp/errors.hpp"
#include "cipp/viewpoints.hpp"

#include "support.hpp"

namespace {

using cipp::test::read_text;
using cipp::test::TempDir;

cipp::ViewpointSet tiny_set() {
    cipp::ViewpointSet vps;
    vps.spacing.delta_w = 43.2;
    vps.spacing.delta_h = 30.6;
    vps.spacing.stitch_overlap_w = 4.8;
    vps.spacing.stitch_overlap_h = 3.4;
    vps.bbox_min = {0.0, 0.0, 0.0};
    vps.bbox_max = {10.0, 10.0, 30.0};
    for (int i = 0; i < 3; ++i) {
        cipp::Viewpoint vp;
        vp.position = {static_cast<double>(i), 0.5, 17.0};
        vp.heading = {0.0, -1.0, 0.0};
        vp.layer = 0;
        vp.cluster = 0;
        vps.viewpoints.push_back(vp);
    }
    return vps;
}

} // namespace

TEST_SUITE("artifacts") {

TEST_CASE("doubles serialize to the shortest round trip text") {
    CHECK(cipp::format_double(1.5) == "1.5");
    CHECK(cipp::format_double(0.1) == "0.1");
    CHECK(cipp::format_double(-0.0) == "0");
    CHECK(cipp::format_double(43.2) == "43.2");
    CHECK(cipp::format_double(1e21) == "1e+21");
}

TEST_CASE("viewpoints csv carries one row per viewpoint") {
    TempDir dir;
    const auto file = dir.file("viewpoints.csv");
    cipp::write_viewpoints_csv(tiny_set(), file);

    const auto text = read_text(file);
    CHECK(text.rfind("layer,cluster,x,y,z,hx,hy,hz\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);
    CHECK(text.find("0,0,1,0.5,17,0,-1,0\n") != std::string::npos);
}

TEST_CASE("viewpoints json round trips through a parser") {
    TempDir dir;
    const auto file = dir.file("viewpoints.json");
    cipp::write_viewpoints_json(tiny_set(), file);

    const auto doc = nlohmann::json::parse(read_text(file));
    CHECK(doc.at("spacing").at("delta_w") == 43.2);
    CHECK(doc.at("viewpoints").size() == 3);
    CHECK(doc.at("viewpoints")[1].at("x") == 1.0);
    CHECK(doc.at("viewpoints")[1].at("hy") == -1.0);
}

TEST_CASE("path json stores the visit order with full metadata") {
    TempDir dir;
    const auto file = dir.file("path.json");
    cipp::write_path_json(tiny_set(), {2, 0, 1}, "aco", 123.5, {1.0, 2.0}, 1, file);

    const auto doc = nlohmann::json::parse(read_text(file));
    CHECK(doc.at("method") == "aco");
    CHECK(doc.at("fitness") == 123.5);
    CHECK(doc.at("weights").at("w1") == 1.0);
    CHECK(doc.at("weights").at("w2") == 2.0);
    CHECK(doc.at("config_version") == 1);
    REQUIRE(doc.at("waypoints").size() == 3);
    CHECK(doc.at("waypoints")[0].at("x") == 2.0);
    CHECK(doc.at("waypoints")[1].at("x") == 0.0);
    // key order is part of the contract
    const auto dumped = doc.at("waypoints")[0].dump();
    CHECK(dumped.find("\"x\"") < dumped.find("\"y\""));
    CHECK(dumped.find("\"hz\"") < dumped.find("\"layer\""));
}

TEST_CASE("history csv is one indexed") {
    TempDir dir;
    const auto file = dir.file("history.csv");
    cipp::write_history_csv({30.0, 25.5, 25.5}, file);
    CHECK(read_text(file) == "iteration,best_fitness\n1,30\n2,25.5\n3,25.5\n");
}

TEST_CASE("comparison statistics use the population deviation") {
    const auto stats = cipp::summarize_comparison(200.0, {90.0, 110.0});
    CHECK(stats.aco_mean == doctest::Approx(100.0));
    CHECK(stats.aco_std == doctest::Approx(10.0));
    CHECK(stats.improvement_percent == doctest::Approx(50.0));
    CHECK(stats.baf_fitness == 200.0);

    CHECK_THROWS_AS(cipp::summarize_comparison(100.0, {}), cipp::ValidationError);
}

TEST_CASE("comparison csv has a fixed two row shape") {
    TempDir dir;
    const auto file = dir.file("compare.csv");
    cipp::write_compare_csv(cipp::summarize_comparison(200.0, {90.0, 110.0}), file);
    CHECK(read_text(file) ==
          "method,mean,std,improvement_percent\nbaf,200,0,0\naco,100,10,50\n");
}

TEST_CASE("unwritable destinations raise io errors") {
    CHECK_THROWS_AS(cipp::write_history_csv({1.0}, "/nonexistent/dir/history.csv"),
                    cipp::IoError);
}

}
