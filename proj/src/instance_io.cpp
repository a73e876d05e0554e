#include "minrank/instance_io.hpp"

#include <fstream>

namespace minrank {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json& require(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end())
    throw usage_error("instance file: missing field \"" + std::string(key) +
                      "\"");
  return *it;
}

int require_int(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer())
    throw usage_error("instance file: field \"" + std::string(key) +
                      "\" must be an integer");
  return v.get<int>();
}

}  // namespace

ordered_json instance_to_json(const MinRankInstance& instance) {
  ordered_json j;
  j["format"] = 1;
  j["kind"] = kind_name(instance.kind());
  j["m"] = instance.m();
  j["n"] = instance.n();
  j["r"] = instance.r();
  j["k"] = instance.k();
  j["p"] = instance.field().modulus();
  j["seed"] = instance.seed();
  j["homogeneous"] = instance.homogeneous();
  j["degree_matrix"] = instance.degrees().grid();
  if (instance.kind() == InstanceKind::classical) {
    ordered_json mats = ordered_json::array();
    for (const FpMatrix& mat : instance.scalar_matrices()) {
      ordered_json rows = ordered_json::array();
      for (std::size_t i = 0; i < mat.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t jj = 0; jj < mat.cols(); ++jj)
          row.push_back(mat.at(i, jj));
        rows.push_back(std::move(row));
      }
      mats.push_back(std::move(rows));
    }
    j["matrices"] = std::move(mats);
  } else {
    ordered_json grid = ordered_json::array();
    for (int i = 0; i < instance.m(); ++i) {
      ordered_json row = ordered_json::array();
      for (int jj = 0; jj < instance.n(); ++jj)
        row.push_back(instance.matrix().entry(i, jj).str());
      grid.push_back(std::move(row));
    }
    j["entries"] = std::move(grid);
  }
  return j;
}

MinRankInstance instance_from_json(const json& j) {
  if (require_int(j, "format") != 1)
    throw usage_error("instance file: unsupported format version");
  const InstanceKind kind =
      kind_from_name(require(j, "kind").get<std::string>());
  const int m = require_int(j, "m");
  const int n = require_int(j, "n");
  const int r = require_int(j, "r");
  const int k = require_int(j, "k");
  const std::int64_t p64 = require(j, "p").get<std::int64_t>();
  if (p64 < 2 || p64 >= (1ll << 31))
    throw usage_error("instance file: p out of range");
  const std::uint32_t p = static_cast<std::uint32_t>(p64);
  const std::uint64_t seed = require(j, "seed").get<std::uint64_t>();
  const bool homogeneous = require(j, "homogeneous").get<bool>();

  const auto grid_json = require(j, "degree_matrix");
  std::vector<std::vector<int>> grid;
  for (const auto& row : grid_json) grid.push_back(row.get<std::vector<int>>());
  const DegreeMatrix degrees = DegreeMatrix::validate(grid);
  if (degrees.grid() != grid)
    throw usage_error(
        "instance file: degree matrix rows must be sorted by first-column "
        "degree (the canonical form written by gen)");

  InstanceParams params{kind, m, n, r, k, p, homogeneous, degrees};

  if (kind == InstanceKind::classical) {
    const auto& mats_json = require(j, "matrices");
    if (static_cast<int>(mats_json.size()) != k)
      throw usage_error("instance file: expected k matrices");
    std::vector<FpMatrix> mats;
    const FieldPrime F(p);
    for (const auto& mj : mats_json) {
      FpMatrix mat(F, static_cast<std::size_t>(m), static_cast<std::size_t>(n));
      if (static_cast<int>(mj.size()) != m)
        throw usage_error("instance file: matrix row count mismatch");
      for (int i = 0; i < m; ++i) {
        if (static_cast<int>(mj[static_cast<std::size_t>(i)].size()) != n)
          throw usage_error("instance file: matrix column count mismatch");
        for (int jj = 0; jj < n; ++jj) {
          const std::int64_t v =
              mj[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)]
                  .get<std::int64_t>();
          if (v < 0 || v >= p64)
            throw usage_error(
                "instance file: matrix entry out of canonical range [0, p)");
          mat.at(static_cast<std::size_t>(i), static_cast<std::size_t>(jj)) =
              static_cast<std::uint32_t>(v);
        }
      }
      mats.push_back(std::move(mat));
    }
    return MinRankInstance::from_classical(params, seed, std::move(mats));
  }

  const auto& entries_json = require(j, "entries");
  if (static_cast<int>(entries_json.size()) != m)
    throw usage_error("instance file: entry row count mismatch");
  const Ambient amb{k, FieldPrime(p)};
  std::vector<std::vector<Polynomial>> entries;
  for (int i = 0; i < m; ++i) {
    const auto& row_json = entries_json[static_cast<std::size_t>(i)];
    if (static_cast<int>(row_json.size()) != n)
      throw usage_error("instance file: entry column count mismatch");
    std::vector<Polynomial> row;
    for (int jj = 0; jj < n; ++jj)
      row.push_back(Polynomial::parse(
          amb, row_json[static_cast<std::size_t>(jj)].get<std::string>()));
    entries.push_back(std::move(row));
  }
  return MinRankInstance::from_generalized(
      params, seed, PolyMatrix(degrees, std::move(entries)));
}

void write_instance(const MinRankInstance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw usage_error("cannot open output file: " + path);
  out << instance_to_json(instance).dump(2) << '\n';
  if (!out) throw usage_error("failed writing instance file: " + path);
}

MinRankInstance read_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open instance file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw usage_error("instance file " + path + ": " + e.what());
  }
  try {
    return instance_from_json(j);
  } catch (const json::exception& e) {
    throw usage_error("instance file " + path + ": " + e.what());
  }
}

ordered_json bound_report_to_json(const bounds::BoundReport& rep) {
  ordered_json j;
  j["m"] = rep.m;
  j["n"] = rep.n;
  j["r"] = rep.r;
  j["k"] = rep.k;
  j["degree_matrix"] = rep.degrees.grid();
  j["classification"] = bounds::class_name(rep.classification);
  j["applicable"] = rep.applicable;
  j["bound_main"] = rep.bound_main;
  if (rep.bound_square) j["bound_square"] = *rep.bound_square;
  if (rep.bound_linear) j["bound_linear"] = *rep.bound_linear;
  if (rep.bound_degd) j["bound_degd"] = *rep.bound_degd;
  if (rep.krull_dim)
    j["krull_dim"] = *rep.krull_dim;
  else
    j["krull_dim"] = nullptr;
  j["a_invariant"] = rep.a_invariant;
  j["regularity"] = rep.regularity;
  return j;
}

}  // namespace minrank
