#include <doctest.h>

#include <filesystem>
#include <map>
#include <thread>
#include <tuple>

#include "data/minimal_mosaic_catalog.hpp"
#include "legmosaic/census.hpp"
#include "legmosaic/enumeration.hpp"
#include "legmosaic/invariants.hpp"
#include "legmosaic/topology.hpp"

using namespace legmosaic;

TEST_CASE("census through size 2") {
  CensusOptions options;
  options.max_size = 2;
  CensusResult census = run_census(options);
  REQUIRE(census.entries.size() == 1);
  const CensusEntry& e = census.entries.front();
  CHECK(e.type == "0_1");
  CHECK(e.tb == -1);
  CHECK(e.rot == 0);
  CHECK(e.min_size == 2);
  CHECK(e.witness == "2134");
  CHECK(e.count_at_min == 1);
  REQUIRE(census.summaries.size() == 1);
  CHECK(census.summaries[0].knot_mosaics == 1);
}

TEST_CASE("census through size 3") {
  CensusOptions options;
  options.max_size = 3;
  CensusResult census = run_census(options);
  const CensusSizeSummary& s = census.summaries.back();
  CHECK(s.n == 3);
  CHECK(s.knot_mosaics == 17);
  CHECK(s.types == std::vector<std::string>{"0_1"});
  CHECK(s.max_tb == -1);
  CHECK(s.min_tb == -3);

  // Every witness re-verifies through the independent pipeline pieces.
  for (const CensusEntry& e : census.entries) {
    Mosaic m = decode(e.witness);
    CHECK(static_cast<int>(m.rows()) == e.min_size);
    CHECK(is_suitably_connected(m));
    CHECK(is_knot(m));
    LegendrianInvariants inv = invariants_of(m);
    CHECK(inv.tb == e.tb);
    CHECK(std::abs(inv.rot) == e.rot);
    CHECK(identify(m) == e.type);
  }
}

TEST_CASE("census workers agree with the single-threaded run") {
  CensusOptions one;
  one.max_size = 3;
  CensusOptions four;
  four.max_size = 3;
  four.workers = 4;
  CensusResult a = run_census(one);
  CensusResult b = run_census(four);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].type == b.entries[i].type);
    CHECK(a.entries[i].tb == b.entries[i].tb);
    CHECK(a.entries[i].rot == b.entries[i].rot);
    CHECK(a.entries[i].witness == b.entries[i].witness);
    CHECK(a.entries[i].count_at_min == b.entries[i].count_at_min);
  }
}

TEST_CASE("census resume from shards") {
  std::string dir = "census_resume_test";
  std::filesystem::remove_all(dir);
  CensusOptions opts;
  opts.max_size = 3;
  opts.out_dir = dir;
  CensusResult first = run_census(opts);
  // Second run resumes from completed shards and must agree.
  opts.resume = true;
  CensusResult second = run_census(opts);
  REQUIRE(first.entries.size() == second.entries.size());
  for (std::size_t i = 0; i < first.entries.size(); ++i) {
    CHECK(first.entries[i].witness == second.entries[i].witness);
    CHECK(first.entries[i].count_at_min == second.entries[i].count_at_min);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("stabilization anomalies empty on a tiny census") {
  CensusOptions options;
  options.max_size = 2;
  CHECK(stabilization_anomalies(run_census(options)).empty());
}

TEST_CASE("size-5 census agrees with the minimal-mosaic catalog") {
  CensusOptions options;
  options.max_size = 5;
  options.workers = static_cast<int>(
      std::max(1u, std::thread::hardware_concurrency()));
  CensusResult census = run_census(options);

  std::map<std::tuple<std::string, int, int>, const CensusEntry*> index;
  for (const CensusEntry& e : census.entries) index[{e.type, e.tb, e.rot}] = &e;

  // Every catalog row of size <= 5 is found at exactly its listed size.
  int compared = 0;
  for (int k = 0; k < testdata::kMinimalMosaicCatalogSize; ++k) {
    const auto& row = testdata::kMinimalMosaicCatalog[k];
    if (row.size > 5) continue;
    ++compared;
    auto it = index.find({row.type, row.tb, std::abs(row.rot)});
    REQUIRE(it != index.end());
    CHECK(it->second->min_size == row.size);
    // The catalog string itself is a valid witness of that triple.
    Mosaic m = decode(row.digits);
    LegendrianInvariants inv = invariants_of(m);
    CHECK(inv.tb == it->second->tb);
    CHECK(std::abs(inv.rot) == it->second->rot);
  }
  CHECK(compared == 42);

  // Realisable type sets per size.
  CHECK(census.summaries[2].types == std::vector<std::string>{"0_1"});
  CHECK(census.summaries[3].types ==
        std::vector<std::string>{"0_1", "3_1", "m(3_1)"});

  // The documented mosaic-number-reducing stabilisation of the unknot:
  // (-4, 3) at size 5 stabilises to (-5, 2) at size 4.
  auto anomalies = stabilization_anomalies(census);
  bool found = false;
  for (const auto& a : anomalies)
    if (a.type == "0_1" && a.source_tb == -4 && a.source_rot == 3 &&
        a.target_tb == -5 && a.target_rot == 2 && a.source_size == 5 &&
        a.target_size == 4)
      found = true;
  CHECK(found);
}

TEST_CASE("mountain range emission") {
  CensusOptions options;
  options.max_size = 3;
  CensusResult census = run_census(options);
  std::string csv = mountain_range_csv(census, "0_1");
  CHECK(csv.find("tb\\rot") != std::string::npos);
  CHECK(csv.find("-1,2") != std::string::npos);  // (-1, 0) realised at size 2
  // Absent type gives an empty table.
  CHECK(mountain_range_csv(census, "4_1") == "tb\\rot\n");
}
