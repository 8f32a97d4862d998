#include "qubitinv/io.hpp"

#include <charconv>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "qubitinv/error.hpp"

namespace qubitinv::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::Parse, msg); }

void require_keys(const json& j, std::string_view what, std::initializer_list<const char*> keys) {
  if (!j.is_object()) fail(std::string(what) + ": expected an object");
  for (const char* k : keys)
    if (!j.contains(k)) fail(std::string(what) + ": missing key \"" + k + "\"");
  for (const auto& [k, _] : j.items()) {
    bool known = false;
    for (const char* allowed : keys) known = known || k == allowed;
    if (!known) fail(std::string(what) + ": unknown key \"" + k + "\"");
  }
}

void require_format(const json& j, const char* format) {
  if (!j.at("format").is_string() || j.at("format").get<std::string>() != format)
    fail(std::string("expected format \"") + format + "\"");
}

int read_n(const json& j, int lo, int hi) {
  if (!j.at("n").is_number_integer()) fail("\"n\" must be an integer");
  const int n = j.at("n").get<int>();
  if (n < lo || n > hi)
    fail("n = " + std::to_string(n) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
  return n;
}

const json& require_array(const json& j, std::size_t size, const std::string& what) {
  if (!j.is_array()) fail(what + ": expected an array");
  if (j.size() != size)
    fail(what + ": expected " + std::to_string(size) + " entries, got " + std::to_string(j.size()));
  return j;
}

json mat3_to_json(const Mat3C& m) {
  json rows = json::array();
  for (std::size_t a = 0; a < 3; ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < 3; ++b) row.push_back(to_json(m(a, b)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_double(double x) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

}  // namespace

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j, std::string_view what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(std::string(what) + ": complex numbers are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const DensityOperator& rho) {
  json rows = json::array();
  const auto& m = rho.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  json j;
  j["format"] = "density";
  j["n"] = rho.n();
  j["matrix"] = std::move(rows);
  return j;
}

DensityOperator density_from_json(const json& j) {
  require_keys(j, "density file", {"format", "n", "matrix"});
  require_format(j, "density");
  const int n = read_n(j, 1, kMaxMatrixSites);
  const auto dim = std::size_t{1} << n;
  const json& rows = require_array(j.at("matrix"), dim, "matrix");
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    const json& row = require_array(rows[r], dim, "matrix row " + std::to_string(r));
    for (std::size_t c = 0; c < dim; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          complex_from_json(row[c], "matrix entry");
  }
  try {
    return DensityOperator(n, std::move(m));
  } catch (const Error& e) {
    fail(std::string("density file: ") + e.what());
  }
}

json to_json(const BlochState& b) {
  json comps = json::object();
  for (unsigned mask : b.layout().masks()) {
    json values = json::array();
    for (const cplx& z : b.component(mask)) values.push_back(to_json(z));
    comps[SubsetId::from_mask(mask).key()] = std::move(values);
  }
  json j;
  j["format"] = "bloch";
  j["n"] = b.n();
  j["components"] = std::move(comps);
  return j;
}

BlochState bloch_from_json(const json& j) {
  require_keys(j, "bloch file", {"format", "n", "components"});
  require_format(j, "bloch");
  const int n = read_n(j, 1, kMaxBlochSites);
  const json& comps = j.at("components");
  if (!comps.is_object()) fail("\"components\" must be an object");
  BlochState b(n);
  const std::size_t expected = (std::size_t{1} << n) - 1;
  if (comps.size() != expected)
    fail("expected " + std::to_string(expected) + " components, got " +
         std::to_string(comps.size()));
  std::set<unsigned> seen;
  for (const auto& [key, values] : comps.items()) {
    SubsetId subset({1});
    try {
      subset = SubsetId::parse(key);
    } catch (const Error& e) {
      fail("component key \"" + key + "\": " + e.what());
    }
    if (subset.max_site() > n) fail("component key \"" + key + "\" exceeds n");
    if (!seen.insert(subset.mask()).second) fail("duplicate component \"" + key + "\"");
    auto slot = b.component(subset.mask());
    const json& arr = require_array(values, slot.size(), "component \"" + key + "\"");
    for (std::size_t k = 0; k < slot.size(); ++k) slot[k] = complex_from_json(arr[k], key);
  }
  return b;
}

json to_json(const LocalRotation& g) {
  json factors = json::array();
  for (const auto& f : g.factors()) factors.push_back(mat3_to_json(f));
  json j;
  j["format"] = "rotation";
  j["n"] = g.n();
  j["factors"] = std::move(factors);
  return j;
}

LocalRotation rotation_from_json(const json& j) {
  require_keys(j, "rotation file", {"format", "n", "factors"});
  require_format(j, "rotation");
  const int n = read_n(j, 1, kMaxBlochSites);
  const json& fs = require_array(j.at("factors"), static_cast<std::size_t>(n), "factors");
  std::vector<Mat3C> factors;
  for (const json& f : fs) {
    require_array(f, 3, "rotation factor");
    Mat3C m;
    for (std::size_t a = 0; a < 3; ++a) {
      require_array(f[a], 3, "rotation row");
      for (std::size_t b = 0; b < 3; ++b) m(a, b) = complex_from_json(f[a][b], "rotation entry");
    }
    factors.push_back(m);
  }
  try {
    return LocalRotation(std::move(factors));
  } catch (const Error& e) {
    fail(std::string("rotation file: ") + e.what());
  }
}

BlochState read_state(const json& j) {
  if (!j.is_object() || !j.contains("format") || !j.at("format").is_string())
    fail("state file needs a \"format\" string");
  const auto format = j.at("format").get<std::string>();
  if (format == "density") return to_bloch(density_from_json(j));
  if (format == "bloch") return bloch_from_json(j);
  if (format == "section") {
    require_keys(j, "section file", {"format", "n", "gamma", "state", "rotation"});
    return bloch_from_json(j.at("state"));
  }
  fail("unknown state format \"" + format + "\"");
}

json to_json(const InvariantVector& v) {
  json labels = json::array();
  json values = json::array();
  for (std::size_t k = 0; k < v.size(); ++k) {
    labels.push_back(to_string(v.labels[k]));
    values.push_back(to_json(v.values[k]));
  }
  json j;
  j["n"] = v.n;
  j["gamma"] = v.gamma;
  j["labels"] = std::move(labels);
  j["values"] = std::move(values);
  return j;
}

InvariantFile invariants_from_json(const json& j) {
  require_keys(j, "invariants file", {"n", "gamma", "labels", "values"});
  InvariantFile f;
  f.n = read_n(j, 2, kMaxBlochSites);
  if (!j.at("gamma").is_string()) fail("\"gamma\" must be a string");
  f.gamma = j.at("gamma").get<std::string>();
  const json& labels = j.at("labels");
  if (!labels.is_array()) fail("\"labels\" must be an array");
  const json& values = require_array(j.at("values"), labels.size(), "values");
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (!labels[k].is_string()) fail("labels must be strings");
    f.labels.push_back(labels[k].get<std::string>());
    f.values.push_back(complex_from_json(values[k], f.labels.back()));
  }
  return f;
}

json to_json(const RankReport& r) {
  json j;
  j["n"] = r.n;
  j["gamma"] = r.gamma;
  j["seed"] = r.seed;
  j["rows"] = r.rows;
  j["cols"] = r.cols;
  j["rank"] = r.rank;
  j["threshold"] = r.threshold;
  j["rank_ratio"] = r.rank_ratio;
  j["next_ratio"] = r.next_ratio ? json(*r.next_ratio) : json(nullptr);
  j["singular_values"] = r.singular_values;
  return j;
}

json to_json(const Canonicalized& c) {
  json j;
  j["format"] = "section";
  j["n"] = c.section.state.n();
  j["gamma"] = c.section.gamma.describe();
  j["state"] = to_json(c.section.state);
  j["rotation"] = to_json(c.rotation);
  return j;
}

std::string to_csv(const InvariantVector& v) {
  std::string out = "label,re,im\n";
  for (std::size_t k = 0; k < v.size(); ++k) {
    // Labels contain commas, so they are quoted.
    out += '"' + to_string(v.labels[k]) + "\"," + format_double(v.values[k].real()) + ',' +
           format_double(v.values[k].imag()) + '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qubitinv::io
