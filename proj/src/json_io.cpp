#include "yperiod/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "yperiod/errors.hpp"

namespace yperiod {

namespace {

// Field access that reports malformed documents as invalid_argument rather
// than leaking nlohmann exception types.
template <typename T>
T field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw std::invalid_argument(std::string("missing field \"") + name + "\"");
  }
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad field \"") + name + "\": " + e.what());
  }
}

const Json& array_field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name) || !j.at(name).is_array()) {
    throw std::invalid_argument(std::string("missing array \"") + name + "\"");
  }
  return j.at(name);
}

void expect_system(const Json& j, const char* system) {
  if (j.contains("system") && field<std::string>(j, "system") != system) {
    throw std::invalid_argument(std::string("expected a ") + system + " document");
  }
}

SystemShape shape_of(const Json& j) { return {field<int>(j, "r"), field<int>(j, "k")}; }

Json site_entry(const Site& s, const Rational& v) {
  Json e = {{"n", s.n}, {"i", s.i}, {"j", s.j}};
  e["num"] = v.numerator().get_str();
  e["den"] = v.denominator().get_str();
  return e;
}

Site site_of(const Json& e) { return {field<int>(e, "n"), field<int>(e, "i"), field<int>(e, "j")}; }

Json edge_entry(const EdgeKey& key, const Rational& v) {
  Json e = {{"j", key.j}, {"n", key.n}, {"i", key.i}};
  e["num"] = v.numerator().get_str();
  e["den"] = v.denominator().get_str();
  return e;
}

EdgeKey edge_of(const Json& e) { return {field<int>(e, "j"), field<int>(e, "n"), field<int>(e, "i")}; }

}  // namespace

Json to_json(const Rational& q) {
  return {{"num", q.numerator().get_str()}, {"den", q.denominator().get_str()}};
}

Rational rational_from_json(const Json& j) {
  return Rational::parse(field<std::string>(j, "num"), field<std::string>(j, "den"));
}

Json to_json(const YState& state) {
  Json j = {{"system", "y"}, {"r", state.shape().r}, {"k", state.shape().k}};
  j["mode"] = state.mode() == YMode::Truncated ? "truncated" : "infinite-window";
  Json values = Json::array();
  for (const auto& [s, v] : state.values()) values.push_back(site_entry(s, v));
  j["values"] = std::move(values);
  return j;
}

YState y_state_from_json(const Json& j) {
  expect_system(j, "y");
  const std::string mode = j.contains("mode") ? field<std::string>(j, "mode") : "truncated";
  if (mode != "truncated" && mode != "infinite-window") {
    throw std::invalid_argument("unknown mode \"" + mode + "\"");
  }
  YState state(shape_of(j), mode == "truncated" ? YMode::Truncated : YMode::InfiniteWindow);
  for (const Json& e : array_field(j, "values")) state.set(site_of(e), rational_from_json(e));
  return state;
}

Json to_json(const ZState& state) {
  Json j = {{"system", "z"}, {"r", state.shape().r}, {"k", state.shape().k}};
  j["provenance"] = state.provenance() == ZProvenance::FromY ? "from-y" : "from-gamma";
  Json values = Json::array();
  for (const auto& [s, v] : state.values()) values.push_back(site_entry(s, v));
  j["values"] = std::move(values);
  return j;
}

ZState z_state_from_json(const Json& j) {
  expect_system(j, "z");
  const std::string prov = j.contains("provenance") ? field<std::string>(j, "provenance") : "from-y";
  if (prov != "from-y" && prov != "from-gamma") {
    throw std::invalid_argument("unknown provenance \"" + prov + "\"");
  }
  ZState state(shape_of(j), prov == "from-y" ? ZProvenance::FromY : ZProvenance::FromGamma);
  for (const Json& e : array_field(j, "values")) state.set(site_of(e), rational_from_json(e));
  return state;
}

Json to_json(const GammaState& state) {
  Json j = {{"system", "gamma"}, {"r", state.shape().r}, {"k", state.shape().k}};
  Json xs = Json::array(), as = Json::array(), free = Json::array();
  for (const auto& [key, v] : state.xs()) xs.push_back(edge_entry(key, v));
  for (const auto& [key, v] : state.as()) as.push_back(edge_entry(key, v));
  for (const FreeChoice& c : state.free_choices()) {
    Json e = {{"kind", c.kind == EdgeKind::X ? "x" : "a"}};
    e.update(edge_entry(c.key, c.value));
    free.push_back(std::move(e));
  }
  j["x"] = std::move(xs);
  j["a"] = std::move(as);
  j["free_choices"] = std::move(free);
  return j;
}

GammaState gamma_state_from_json(const Json& j) {
  expect_system(j, "gamma");
  GammaState state(shape_of(j));
  for (const Json& e : array_field(j, "x")) state.set_x(edge_of(e), rational_from_json(e));
  for (const Json& e : array_field(j, "a")) state.set_a(edge_of(e), rational_from_json(e));
  if (j.contains("free_choices")) {
    for (const Json& e : array_field(j, "free_choices")) {
      const std::string kind = field<std::string>(e, "kind");
      if (kind != "x" && kind != "a") throw std::invalid_argument("unknown edge kind \"" + kind + "\"");
      state.add_free_choice({kind == "x" ? EdgeKind::X : EdgeKind::A, edge_of(e), rational_from_json(e)});
    }
  }
  return state;
}

Json to_json(const SquareMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"size", m.size()}, {"index_base", 1}, {"rows", std::move(rows)}};
}

SquareMatrix matrix_from_json(const Json& j) {
  const Json& rows = array_field(j, "rows");
  SquareMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != rows.size()) {
      throw std::invalid_argument("matrix rows must be square");
    }
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rational_from_json(rows[r][c]);
  }
  return m;
}

Json to_json(const Report& report) {
  Json counters = Json::array();
  for (const auto& [key, c] : report.counters()) {
    counters.push_back({{"check", key.check},
                        {"shape", key.shape},
                        {"checked", c.checked},
                        {"passed", c.passed},
                        {"failed", c.failed}});
  }
  Json violations = Json::array();
  for (const Violation& v : report.violations()) {
    violations.push_back({{"check", v.check},
                          {"shape", v.shape},
                          {"where", v.where},
                          {"expected", v.expected},
                          {"actual", v.actual}});
  }
  Json trials = Json::array();
  for (const TrialMeta& t : report.trials()) {
    trials.push_back({{"shape", t.shape},
                      {"seed", t.seed},
                      {"retries", t.retries},
                      {"transposed", t.transposed},
                      {"exhausted", t.exhausted},
                      {"wall_ms", t.wall_ms}});
  }
  return {{"all_passed", report.all_passed()},
          {"total_checked", report.total_checked()},
          {"total_failed", report.total_failed()},
          {"counters", std::move(counters)},
          {"violations", std::move(violations)},
          {"trials", std::move(trials)},
          {"notes", report.notes()}};
}

Report report_from_json(const Json& j) {
  Report report;
  for (const Json& e : array_field(j, "counters")) {
    Counter c{field<std::uint64_t>(e, "checked"), field<std::uint64_t>(e, "passed"),
              field<std::uint64_t>(e, "failed")};
    report.mutable_counters()[{field<std::string>(e, "check"), field<std::string>(e, "shape")}] = c;
  }
  if (j.contains("violations")) {
    for (const Json& e : array_field(j, "violations")) {
      report.mutable_violations().push_back({field<std::string>(e, "check"), field<std::string>(e, "shape"),
                                             field<std::string>(e, "where"), field<std::string>(e, "expected"),
                                             field<std::string>(e, "actual")});
    }
  }
  if (j.contains("trials")) {
    for (const Json& e : array_field(j, "trials")) {
      report.add_trial({field<std::string>(e, "shape"), field<std::uint64_t>(e, "seed"),
                        field<int>(e, "retries"), field<bool>(e, "transposed"), field<bool>(e, "exhausted"),
                        field<double>(e, "wall_ms")});
    }
  }
  if (j.contains("notes")) {
    for (const Json& e : array_field(j, "notes")) report.add_note(e.get<std::string>());
  }
  return report;
}

std::string report_to_csv(const Report& report) {
  std::ostringstream out;
  out << "check,shape,checked,passed,failed\n";
  for (const auto& [key, c] : report.counters()) {
    // shape labels contain a comma
    out << key.check << ",\"" << key.shape << "\"," << c.checked << ',' << c.passed << ',' << c.failed << '\n';
  }
  return out.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoFailure("write to " + path.string() + " failed");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace yperiod
