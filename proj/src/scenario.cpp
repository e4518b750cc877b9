#include "isac/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "isac/errors.hpp"

namespace isac {

namespace {

struct Entry {
  std::string value;
  std::size_t line;
  std::size_t column;  // of the value
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

double to_double(const Entry& e) {
  double v = 0.0;
  const char* begin = e.value.data();
  const char* end = begin + e.value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ParseError(e.line, e.column, "expected a number, got '" + e.value + "'");
  }
  return v;
}

long to_long(const Entry& e) {
  long v = 0;
  const char* begin = e.value.data();
  const char* end = begin + e.value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(e.line, e.column, "expected an integer, got '" + e.value + "'");
  }
  return v;
}

std::uint64_t to_u64(const Entry& e) {
  std::uint64_t v = 0;
  const char* begin = e.value.data();
  const char* end = begin + e.value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(e.line, e.column, "expected an unsigned integer, got '" + e.value + "'");
  }
  return v;
}

bool to_bool(const Entry& e) {
  const std::string v = lower(e.value);
  if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
  if (v == "false" || v == "no" || v == "0" || v == "off") return false;
  throw ParseError(e.line, e.column, "expected true or false, got '" + e.value + "'");
}

template <typename Enum>
Enum to_choice(const Entry& e, std::initializer_list<std::pair<const char*, Enum>> choices) {
  const std::string v = lower(e.value);
  std::string names;
  for (const auto& [name, value] : choices) {
    if (v == name) return value;
    names += names.empty() ? name : std::string(", ") + name;
  }
  throw ParseError(e.line, e.column, "expected one of {" + names + "}, got '" + e.value + "'");
}

const std::map<std::string, std::vector<std::string>>& known_keys() {
  static const std::map<std::string, std::vector<std::string>> keys = {
      {"network", {"lambda", "eta", "sigma2", "p_l", "p_h", "m_slots", "p_r", "eps_mono"}},
      {"geometry", {"r1_in_v", "r2_in_v", "r_r_in_v", "v_override"}},
      {"thresholds", {"theta_db_min", "theta_db_max", "theta_db_step"}},
      {"simulation",
       {"trials", "seed", "fidelity", "r_max_factor", "interferer_power", "reject_outside_cell",
        "fading", "r3_law"}},
      {"modes", {"include"}},
  };
  return keys;
}

void add_modes(std::vector<SinrMode>& modes, std::string_view list, std::size_t line,
               std::size_t column) {
  std::size_t pos = 0;
  while (pos < list.size()) {
    const auto start = list.find_first_not_of(" \t,", pos);
    if (start == std::string_view::npos) break;
    auto stop = list.find_first_of(" \t,", start);
    if (stop == std::string_view::npos) stop = list.size();
    const std::string_view tag = list.substr(start, stop - start);
    const auto mode = parse_mode(tag);
    if (!mode) {
      throw ParseError(line, column + start, "unknown mode '" + std::string(tag) + "'");
    }
    modes.push_back(*mode);
    pos = stop;
  }
}

}  // namespace

std::vector<double> Scenario::theta_linear() const {
  std::vector<double> out;
  out.reserve(theta_db.size());
  for (double x : theta_db) out.push_back(db_to_linear(x));
  return out;
}

std::vector<double> make_grid(double min, double max, double step) {
  if (!(step > 0.0) || !(max >= min)) throw DomainError("grid: need step > 0 and max >= min");
  const long n = std::lround(std::floor((max - min) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) out.push_back(min + static_cast<double>(i) * step);
  return out;
}

Scenario default_scenario() {
  const NetworkParams params;
  return Scenario{params,
                  ScenarioGeometry::from_units(params.lambda(), 5.0, 15.0, 5.0),
                  make_grid(-50.0, 10.0, 2.0),
                  SimConfig{},
                  std::vector<SinrMode>(kAllModes.begin(), kAllModes.end()),
                  30.0};
}

Scenario parse_scenario(std::string_view text) {
  std::map<std::string, std::map<std::string, Entry>> doc;
  std::vector<SinrMode> modes;
  bool modes_given = false;
  std::string section;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    const auto comment = raw.find_first_of("#;");
    const std::string_view content = comment == std::string_view::npos ? raw : raw.substr(0, comment);
    const std::string_view body = trim(content);
    if (body.empty()) continue;
    const std::size_t indent = content.find_first_not_of(" \t") + 1;

    if (body.front() == '[') {
      if (body.back() != ']') throw ParseError(line_no, indent, "unterminated section header");
      section = lower(trim(body.substr(1, body.size() - 2)));
      if (!known_keys().count(section)) {
        throw ParseError(line_no, indent + 1, "unknown section [" + section + "]");
      }
      if (section == "modes") modes_given = true;
      continue;
    }
    if (section.empty()) throw ParseError(line_no, indent, "key outside of any section");

    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      if (section == "modes") {
        add_modes(modes, body, line_no, indent);
        continue;
      }
      throw ParseError(line_no, indent, "expected 'key = value'");
    }
    const std::string key = lower(trim(body.substr(0, eq)));
    const std::string_view value = trim(body.substr(eq + 1));
    const auto& allowed = known_keys().at(section);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ParseError(line_no, indent, "unknown key '" + key + "' in [" + section + "]");
    }
    const std::string_view rest = body.substr(eq + 1);
    const auto lead = rest.find_first_not_of(" \t");
    const std::size_t value_col = indent + eq + 1 + (lead == std::string_view::npos ? 0 : lead);
    if (value.empty()) throw ParseError(line_no, value_col, "missing value for '" + key + "'");
    if (section == "modes") {
      add_modes(modes, value, line_no, value_col);
      continue;
    }
    if (doc[section].count(key)) {
      throw ParseError(line_no, indent, "duplicate key '" + key + "'");
    }
    doc[section][key] = Entry{std::string(value), line_no, value_col};
  }

  Scenario sc = default_scenario();
  const auto get = [&](const std::string& s, const std::string& k) -> const Entry* {
    const auto it = doc.find(s);
    if (it == doc.end()) return nullptr;
    const auto jt = it->second.find(k);
    return jt == it->second.end() ? nullptr : &jt->second;
  };
  // Wraps domain errors from the constructors with the location of the
  // first key of the section.
  const auto locate = [&](const std::string& s) -> std::pair<std::size_t, std::size_t> {
    const auto it = doc.find(s);
    if (it == doc.end() || it->second.empty()) return {1, 1};
    std::size_t best = SIZE_MAX, col = 1;
    for (const auto& [k, e] : it->second) {
      if (e.line < best) {
        best = e.line;
        col = e.column;
      }
    }
    return {best, col};
  };

  NetworkSettings ns;
  if (auto e = get("network", "lambda")) ns.lambda = to_double(*e);
  if (auto e = get("network", "eta")) ns.eta = to_double(*e);
  if (auto e = get("network", "sigma2")) ns.sigma2 = to_double(*e);
  if (auto e = get("network", "p_l")) ns.p_l = to_double(*e);
  if (auto e = get("network", "p_h")) ns.p_h = to_double(*e);
  if (auto e = get("network", "m_slots")) ns.m_slots = static_cast<int>(to_long(*e));
  if (auto e = get("network", "p_r")) ns.p_r = to_double(*e);
  try {
    sc.params = NetworkParams(ns);
  } catch (const DomainError& err) {
    const auto [l, c] = locate("network");
    throw ParseError(l, c, err.what());
  }
  if (auto e = get("network", "eps_mono")) {
    sc.sim.fit = FadingFit::standard(to_choice<EpsMonoReading>(
        *e, {{"mean_matched", EpsMonoReading::MeanMatched}, {"literal", EpsMonoReading::Literal}}));
  }

  double r1 = 5.0, r2 = 15.0, rr = 5.0;
  std::optional<double> v;
  if (auto e = get("geometry", "r1_in_v")) r1 = to_double(*e);
  if (auto e = get("geometry", "r2_in_v")) r2 = to_double(*e);
  if (auto e = get("geometry", "r_r_in_v")) rr = to_double(*e);
  if (auto e = get("geometry", "v_override")) v = to_double(*e);
  try {
    sc.geometry = ScenarioGeometry::from_units(sc.params.lambda(), r1, r2, rr, v);
  } catch (const DomainError& err) {
    const auto [l, c] = locate("geometry");
    throw ParseError(l, c, err.what());
  }

  double tmin = -50.0, tmax = 10.0, tstep = 2.0;
  if (auto e = get("thresholds", "theta_db_min")) tmin = to_double(*e);
  if (auto e = get("thresholds", "theta_db_max")) tmax = to_double(*e);
  if (auto e = get("thresholds", "theta_db_step")) tstep = to_double(*e);
  try {
    sc.theta_db = make_grid(tmin, tmax, tstep);
  } catch (const DomainError& err) {
    const auto [l, c] = locate("thresholds");
    throw ParseError(l, c, err.what());
  }

  if (auto e = get("simulation", "trials")) {
    sc.sim.trials = to_long(*e);
    if (sc.sim.trials < 1) throw ParseError(e->line, e->column, "trials must be >= 1");
  }
  if (auto e = get("simulation", "seed")) sc.sim.seed = to_u64(*e);
  if (auto e = get("simulation", "fidelity")) {
    sc.sim.fidelity = to_choice<Fidelity>(*e, {{"a", Fidelity::A}, {"b", Fidelity::B}});
  }
  if (auto e = get("simulation", "r_max_factor")) {
    sc.r_max_factor = to_double(*e);
    if (!(sc.r_max_factor > 0.0)) throw ParseError(e->line, e->column, "r_max_factor must be > 0");
  }
  if (auto e = get("simulation", "interferer_power")) {
    sc.sim.interferer_power = to_choice<InterfererPower>(
        *e, {{"averaged", InterfererPower::Averaged}, {"aloha", InterfererPower::Aloha}});
  }
  if (auto e = get("simulation", "reject_outside_cell")) sc.sim.reject_outside_cell = to_bool(*e);
  if (auto e = get("simulation", "fading")) {
    sc.sim.fading =
        to_choice<FadingLaw>(*e, {{"exact", FadingLaw::Exact}, {"fitted", FadingLaw::Fitted}});
  }
  if (auto e = get("simulation", "r3_law")) {
    sc.sim.r3_law =
        to_choice<R3Law>(*e, {{"approximate", R3Law::Approximate}, {"exact", R3Law::Exact}});
  }
  sc.sim.r_max = sc.r_max_factor / std::sqrt(std::numbers::pi * sc.params.lambda());

  if (modes_given) {
    if (modes.empty()) throw ParseError(line_no, 1, "[modes] lists no modes");
    sc.modes = modes;
  }
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace isac
