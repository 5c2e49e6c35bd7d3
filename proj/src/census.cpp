#include "legmosaic/census.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "legmosaic/bounds.hpp"
#include "legmosaic/enumeration.hpp"
#include "legmosaic/invariants.hpp"
#include "legmosaic/topology.hpp"

namespace legmosaic {

namespace {

struct TripleKey {
  std::string type;
  int tb;
  int rot;
  bool operator<(const TripleKey& o) const {
    return std::tie(type, tb, rot) < std::tie(o.type, o.tb, o.rot);
  }
};

struct TripleData {
  std::string witness;
  long long count = 0;
};

struct SizeAggregate {
  long long knot_mosaics = 0;
  int max_tb = 0, min_tb = 0, max_abs_rot = 0;
  bool any = false;
  std::map<TripleKey, TripleData> triples;

  void merge(const SizeAggregate& other) {
    knot_mosaics += other.knot_mosaics;
    if (other.any) {
      if (!any) {
        max_tb = other.max_tb;
        min_tb = other.min_tb;
        max_abs_rot = other.max_abs_rot;
        any = true;
      } else {
        max_tb = std::max(max_tb, other.max_tb);
        min_tb = std::min(min_tb, other.min_tb);
        max_abs_rot = std::max(max_abs_rot, other.max_abs_rot);
      }
    }
    for (const auto& [key, data] : other.triples) {
      auto& mine = triples[key];
      mine.count += data.count;
      if (mine.witness.empty() || data.witness < mine.witness)
        mine.witness = data.witness;
    }
  }
};

// Worker-local shard files: allow restarting an interrupted size run.
std::string shard_path(const std::string& dir, int n, int worker) {
  return dir + "/census_shard_" + std::to_string(n) + "_" + std::to_string(worker) +
         ".tsv";
}

void save_shard(const std::string& path, long long last_prefix,
                const SizeAggregate& agg) {
  std::ofstream out(path + ".tmp", std::ios::trunc);
  out << "prefix\t" << last_prefix << "\n";
  out << "stats\t" << agg.knot_mosaics << "\t" << (agg.any ? 1 : 0) << "\t"
      << agg.max_tb << "\t" << agg.min_tb << "\t" << agg.max_abs_rot << "\n";
  for (const auto& [key, data] : agg.triples)
    out << key.type << "\t" << key.tb << "\t" << key.rot << "\t" << data.count
        << "\t" << data.witness << "\n";
  out.close();
  std::filesystem::rename(path + ".tmp", path);
}

bool load_shard(const std::string& path, long long& last_prefix, SizeAggregate& agg) {
  std::ifstream in(path);
  if (!in) return false;
  std::string line;
  if (!std::getline(in, line)) return false;
  {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag >> last_prefix;
    if (tag != "prefix") return false;
  }
  if (!std::getline(in, line)) return false;
  {
    std::istringstream ls(line);
    std::string tag;
    int any = 0;
    ls >> tag >> agg.knot_mosaics >> any >> agg.max_tb >> agg.min_tb >>
        agg.max_abs_rot;
    if (tag != "stats") return false;
    agg.any = any != 0;
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    TripleKey key;
    TripleData data;
    std::getline(ls, key.type, '\t');
    std::string field;
    std::getline(ls, field, '\t');
    key.tb = std::stoi(field);
    std::getline(ls, field, '\t');
    key.rot = std::stoi(field);
    std::getline(ls, field, '\t');
    data.count = std::stoll(field);
    std::getline(ls, data.witness, '\t');
    agg.triples[key] = data;
  }
  return true;
}

SizeAggregate census_size_worker(int n, int worker, int workers,
                                 const CensusOptions& options) {
  SizeAggregate agg;
  long long resume_after = -1;
  std::string path;
  if (!options.out_dir.empty()) {
    path = shard_path(options.out_dir, n, worker);
    if (options.resume) {
      long long done = -1;
      SizeAggregate saved;
      if (load_shard(path, done, saved)) {
        resume_after = done;
        agg.merge(saved);
      }
    }
  }

  // Smooth-type lookup memoised on the polynomial text.
  std::map<std::string, std::string> type_cache;
  long long since_checkpoint = 0;
  long long last_prefix = resume_after;

  EnumerationRequest req;
  req.rows = req.cols = n;
  req.filter = EnumFilter::knots_only;
  req.worker_index = worker;
  req.worker_total = workers;
  req.resume_after = resume_after;
  req.max_cells = options.max_cells;
  // Fixed prefix depth so checkpoints always fire and resume indices stay
  // stable across worker counts.
  req.prefix_cells = std::min(n * n, 2 * n);

  enumerate(
      req,
      [&](const Mosaic& m) {
        LegendrianInvariants inv = invariants_of(m);
        HomflyPolynomial poly = homfly(to_planar_diagram(m), options.crossing_cap);
        std::string poly_text = poly.to_string();
        auto it = type_cache.find(poly_text);
        if (it == type_cache.end())
          it = type_cache.emplace(poly_text, identify_polynomial(poly)).first;
        const std::string& type = it->second;

        int abs_rot = inv.rot < 0 ? -inv.rot : inv.rot;
        ++agg.knot_mosaics;
        if (!agg.any) {
          agg.max_tb = agg.min_tb = inv.tb;
          agg.max_abs_rot = abs_rot;
          agg.any = true;
        } else {
          agg.max_tb = std::max(agg.max_tb, inv.tb);
          agg.min_tb = std::min(agg.min_tb, inv.tb);
          agg.max_abs_rot = std::max(agg.max_abs_rot, abs_rot);
        }
        TripleKey key{type, inv.tb, abs_rot};
        auto& data = agg.triples[key];
        ++data.count;
        std::string digits = encode(m).digits;
        if (data.witness.empty() || digits < data.witness) data.witness = digits;
        return true;
      },
      [&](long long prefix) {
        last_prefix = prefix;
        if (!path.empty() && ++since_checkpoint >= 500) {
          save_shard(path, last_prefix, agg);
          since_checkpoint = 0;
        }
      });

  if (!path.empty()) save_shard(path, last_prefix, agg);
  return agg;
}

}  // namespace

CensusResult run_census(const CensusOptions& options) {
  if (options.max_size < 2)
    throw domain_error("DomainError", "census needs max size >= 2");
  if (static_cast<long long>(options.max_size) * options.max_size > options.max_cells)
    throw resource_error("BudgetExceeded",
                         "census size " + std::to_string(options.max_size) +
                             " exceeds the cell budget");
  if (!options.out_dir.empty())
    std::filesystem::create_directories(options.out_dir);

  CensusResult result;
  result.max_size = options.max_size;

  // Accumulated across sizes: first size wins min_size.
  std::map<TripleKey, CensusEntry> entries;
  std::set<std::string> seen_types;

  for (int n = 2; n <= options.max_size; ++n) {
    if (options.progress)
      options.progress("census: enumerating " + std::to_string(n) + "x" +
                       std::to_string(n));
    int workers = std::max(1, options.workers);
    std::vector<SizeAggregate> parts(workers);
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          parts[w] = census_size_worker(n, w, workers, options);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    SizeAggregate agg;
    for (const auto& p : parts) agg.merge(p);

    for (const auto& [key, data] : agg.triples) {
      if (entries.count(key)) continue;  // realised at a smaller size already
      CensusEntry e;
      e.type = key.type;
      e.tb = key.tb;
      e.rot = key.rot;
      e.min_size = n;
      e.witness = data.witness;
      e.count_at_min = data.count;
      entries.emplace(key, std::move(e));
      seen_types.insert(key.type);
    }

    CensusSizeSummary summary;
    summary.n = n;
    summary.knot_mosaics = agg.knot_mosaics;
    summary.max_tb = agg.max_tb;
    summary.min_tb = agg.min_tb;
    summary.max_abs_rot = agg.max_abs_rot;
    summary.triples_unsigned = static_cast<long long>(entries.size());
    long long signed_count = 0;
    for (const auto& [key, e] : entries) signed_count += key.rot == 0 ? 1 : 2;
    summary.triples_signed = signed_count;
    summary.types.assign(seen_types.begin(), seen_types.end());
    result.summaries.push_back(std::move(summary));
  }

  for (auto& [key, e] : entries) result.entries.push_back(e);
  std::sort(result.entries.begin(), result.entries.end(),
            [](const CensusEntry& a, const CensusEntry& b) {
              if (a.type != b.type) return a.type < b.type;
              if (a.tb != b.tb) return a.tb > b.tb;
              return a.rot < b.rot;
            });
  return result;
}

std::vector<StabilizationAnomaly> stabilization_anomalies(const CensusResult& census) {
  std::map<std::tuple<std::string, int, int>, const CensusEntry*> index;
  for (const CensusEntry& e : census.entries)
    index[{e.type, e.tb, e.rot}] = &e;
  std::vector<StabilizationAnomaly> out;
  for (const CensusEntry& e : census.entries) {
    for (int target_rot : {e.rot + 1, std::abs(e.rot - 1)}) {
      auto it = index.find({e.type, e.tb - 1, target_rot});
      if (it == index.end()) continue;
      if (it->second->min_size < e.min_size) {
        out.push_back({e.type, e.tb, e.rot, e.min_size, e.tb - 1, target_rot,
                       it->second->min_size});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    auto ka = std::make_tuple(a.type, -a.source_tb, a.source_rot, a.target_rot);
    auto kb = std::make_tuple(b.type, -b.source_tb, b.source_rot, b.target_rot);
    return ka < kb;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto& a, const auto& b) {
                          return a.type == b.type && a.source_tb == b.source_tb &&
                                 a.source_rot == b.source_rot &&
                                 a.target_rot == b.target_rot;
                        }),
            out.end());
  return out;
}

std::string mountain_range_csv(const CensusResult& census, const std::string& type) {
  std::vector<const CensusEntry*> of_type;
  for (const CensusEntry& e : census.entries)
    if (e.type == type) of_type.push_back(&e);
  std::ostringstream os;
  if (of_type.empty()) {
    os << "tb\\rot\n";
    return os.str();
  }
  int max_tb = of_type.front()->tb, min_tb = of_type.front()->tb, max_rot = 0;
  for (const auto* e : of_type) {
    max_tb = std::max(max_tb, e->tb);
    min_tb = std::min(min_tb, e->tb);
    max_rot = std::max(max_rot, e->rot);
  }
  std::map<std::pair<int, int>, const CensusEntry*> index;
  for (const auto* e : of_type) index[{e->tb, e->rot}] = e;

  // A cell lies in the stabilisation cone of an entry (tb0, r0) if it is
  // reachable by adding cusp pairs: tb0 - tb >= | r -+ r0 |.
  auto in_cone = [&](int tb, int rot) {
    for (const auto* e : of_type) {
      int k = e->tb - tb;
      if (k < 0) continue;
      if (std::abs(rot - e->rot) <= k || std::abs(rot + e->rot) <= k) return true;
    }
    return false;
  };

  os << "tb\\rot";
  for (int r = 0; r <= max_rot; ++r) os << "," << r;
  os << "\n";
  for (int tb = max_tb; tb >= min_tb; --tb) {
    os << tb;
    for (int r = 0; r <= max_rot; ++r) {
      os << ",";
      auto it = index.find({tb, r});
      if (it != index.end()) {
        os << it->second->min_size;
      } else if (in_cone(tb, r) && (tb + r) % 2 != 0) {
        long long lower = lower_bounds({tb, r}).best_lower;
        os << ">=" << std::max<long long>(lower, census.max_size + 1);
      }
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace legmosaic
