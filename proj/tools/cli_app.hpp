#pragma once

// Command-line front end. Kept in a header so the tests can drive it
// in-process.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <enriques/verification.hpp>

namespace enriques::cli {

using nlohmann::json;

enum class Status { Ok, Inconclusive, Mismatch, Error, Usage };

inline int exit_code(Status s) {
  switch (s) {
    case Status::Ok: return 0;
    case Status::Inconclusive:
    case Status::Mismatch:
    case Status::Error: return 1;
    case Status::Usage: return 2;
  }
  return 2;
}

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Inconclusive: return "inconclusive";
    case Status::Mismatch: return "mismatch";
    case Status::Error: return "error";
    case Status::Usage: return "usage";
  }
  return "?";
}

struct Report {
  std::string command;
  Status status = Status::Ok;
  std::string message;
  json result = json::object();
  std::vector<std::string> text;  // human-readable lines

  json to_json() const {
    json j{{"command", command}, {"status", status_name(status)}, {"result", result}};
    if (!message.empty()) j["message"] = message;
    return j;
  }
};

inline json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

inline json coords_json(const NumClass& n) {
  json a = json::array();
  for (std::size_t i = 0; i < kRank; ++i) a.push_back(integer_json(n[i]));
  return a;
}

inline json pic_json(const PicClass& d) {
  return {{"num", coords_json(d.num)}, {"eps", d.eps}, {"text", to_string(d)}};
}

/// Accepts `pic[...]`, `num[...]` or a decomposition expression.
inline PicClass read_class(const std::string& text) {
  std::size_t p = text.find_first_not_of(" \t");
  if (p != std::string::npos && (text.compare(p, 4, "pic[") == 0 || text.compare(p, 4, "num[") == 0))
    return parse_pic(text);
  return realize(parse_decomposition(text));
}

inline json certificate_json(const Certificate& c) {
  json j{{"method", to_string(c.method)}, {"recipe", c.recipe}, {"summary", summary(c)}};
  json aux = json::array();
  for (std::size_t i = 0; i < c.auxiliary.size(); ++i) {
    json a = pic_json(c.auxiliary[i]);
    if (i < c.auxiliary_names.size()) a["name"] = c.auxiliary_names[i];
    aux.push_back(a);
  }
  j["auxiliary"] = aux;
  auto put = [&](const char* key, const std::optional<long long>& v) {
    if (v) j[key] = *v;
  };
  put("pullback_h1", c.pullback_h1);
  put("branch_lower", c.branch_lower);
  put("branch_upper", c.branch_upper);
  put("euler_h1", c.euler_h1);
  put("normal_h0", c.normal_h0);
  put("mult_corank", c.mult_corank);
  if (!c.mult_corank_rule.empty()) j["mult_corank_rule"] = c.mult_corank_rule;
  if (c.pushforward) j["pushforward"] = {c.pushforward->first, c.pushforward->second};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

inline json interval_json(const H1Interval& r) {
  return {{"lower", r.lower},
          {"upper", r.upper},
          {"exact", r.exact},
          {"certificate", certificate_json(r.certificate)}};
}

inline Report cmd_analyze(const std::string& expr) {
  Report rep;
  rep.command = "analyze";
  DecompositionType d = parse_decomposition(expr);
  auto v = validate_simple(d);
  if (!v.valid) throw PreconditionError("not a simple decomposition type: " + v.diagnosis);
  PicClass h = realize(d);
  long long g = genus(h);
  PhiResult ph = phi(h);
  auto record = component_record_of(d);

  json& r = rep.result;
  r["input"] = expr;
  r["type"] = to_string(d);
  r["class"] = pic_json(h);
  r["g"] = g;
  r["phi"] = ph.value;
  r["phi_witness"] = pic_json(ph.witness);
  r["component"] = record ? json(record->label) : json(nullptr);
  r["surface_model"] = "unnodal";
  rep.text.push_back("type       " + to_string(d) + "  (" + to_string(h) + ")");
  rep.text.push_back("g = " + std::to_string(g) + ", phi = " + std::to_string(ph.value) +
                     " (witness " + to_string(ph.witness) + ")");
  rep.text.push_back("component  " + (record ? record->label : std::string("not in database")));

  H1Outcome out = h1_tangent_k3(d);
  if (auto* iv = std::get_if<H1Interval>(&out)) {
    r["h1_k3"] = interval_json(*iv);
    rep.text.push_back("h1 on K3   [" + std::to_string(iv->lower) + "," + std::to_string(iv->upper) +
                       "]" + (iv->exact ? " exact" : "") + "  " + summary(iv->certificate));
  } else {
    r["h1_k3"] = {{"inconclusive", std::get<Inconclusive>(out).reason}};
    rep.text.push_back("h1 on K3   inconclusive: " + std::get<Inconclusive>(out).reason);
  }
  r["split"] = nullptr;
  r["fiber_dim_chi"] = nullptr;
  r["fiber_dim_c"] = nullptr;
  r["extendability_cap"] = nullptr;

  ComponentRecord comp;
  if (record) {
    comp = *record;
  } else {
    comp.label = "";
    comp.g = static_cast<int>(g);
    comp.phi = static_cast<int>(ph.value);
    comp.dtype = d;
  }
  try {
    FiberDimension f = fiber_dimension(comp);
    r["split"] = {{"h1_H", f.split.h1_H}, {"h1_HK", f.split.h1_HK}, {"rule", to_string(f.split.rule)}};
    r["fiber_dim_chi"] = f.value;
    r["fiber_dim_c"] = f.value;  // the forgetful map from Prym curves is finite
    if (f.total.certificate.method == BoundMethod::Reference)
      r["h1_k3_resolved"] = interval_json(f.total);
    rep.text.push_back("split      (" + std::to_string(f.split.h1_H) + "," +
                       std::to_string(f.split.h1_HK) + ") by " + to_string(f.split.rule));
    rep.text.push_back("fiber dim  " + std::to_string(f.value));
    if (ph.value >= 3) {
      auto cap = extendability_cap(comp);
      r["extendability_cap"] = cap ? json(*cap) : json(nullptr);
      rep.text.push_back("extendable at most " + (cap ? std::to_string(*cap) : std::string("0")) +
                         " step(s)");
    }
  } catch (const InconclusiveError& e) {
    rep.status = Status::Inconclusive;
    rep.message = e.what();
    rep.text.push_back("fiber dim  inconclusive: " + std::string(e.what()));
  }
  rep.text.push_back("(unnodal surface assumed)");
  return rep;
}

inline json dtype_components_json(const ComponentRecord& c) {
  json j{{"label", c.label}, {"g", c.g}, {"phi", c.phi}, {"type", to_string(c.dtype)}};
  j["fiber_dim"] = c.fiber_dim ? json(*c.fiber_dim) : json(nullptr);
  j["split"] = c.split ? json::array({c.split->first, c.split->second}) : json(nullptr);
  j["extendability_cap"] = c.cap ? json(*c.cap) : json(nullptr);
  return j;
}

inline Report cmd_components(int g, int phi_value) {
  Report rep;
  rep.command = "components";
  json list = json::array();
  for (const auto& c : components(g, phi_value)) {
    list.push_back(dtype_components_json(c));
    std::string line = c.label + "  H ~ " + to_string(c.dtype);
    if (c.fiber_dim) line += "  fiber dim " + std::to_string(*c.fiber_dim);
    rep.text.push_back(line);
  }
  if (list.empty()) rep.text.push_back("no components (phi^2 > 2g - 2)");
  rep.result = {{"g", g}, {"phi", phi_value}, {"components", list}};
  return rep;
}

inline Report cmd_phi(const std::string& cls) {
  Report rep;
  rep.command = "phi";
  PicClass h = read_class(cls);
  PhiResult r = phi(h);
  rep.result = {{"phi", r.value}, {"witness", coords_json(r.witness.num)}, {"surface_model", "unnodal"}};
  rep.text.push_back("phi = " + std::to_string(r.value) + ", witness " + to_string(r.witness.num));
  return rep;
}

inline Report cmd_coh(const std::string& cls, bool k3) {
  Report rep;
  rep.command = "coh";
  PicClass d = read_class(cls);
  CohTriple t = k3 ? k3_coh(d) : coh(d);
  rep.result = {{"h0", t.h0}, {"h1", t.h1}, {"h2", t.h2}, {"exact", t.exact}};
  if (k3) rep.result["cover"] = "k3";
  std::ostringstream os;
  os << (k3 ? "K3 cover " : "") << "h0 = " << t.h0 << ", h1 = " << t.h1 << ", h2 = " << t.h2;
  rep.text.push_back(os.str());
  return rep;
}

inline Report cmd_enumerate(const std::string& cls, long long kmax) {
  Report rep;
  rep.command = "enumerate";
  PicClass h = read_class(cls);
  json list = json::array();
  for (const auto& nu : enumerate_isotropic(h, kmax)) {
    long long k = to_ll(inner(nu, h.num));
    list.push_back({{"pairing", k}, {"class", coords_json(nu)}});
    rep.text.push_back(std::to_string(k) + "  " + to_string(nu));
  }
  rep.result = {{"kmax", kmax}, {"classes", list}};
  return rep;
}

struct Scope {
  const char* name;
  const char* alias;
  const char* title;
  std::vector<RowCheck> (*run)();
};

inline const std::vector<Scope>& scopes() {
  static const std::vector<Scope> s = {
      {"exceptional", "restanti", "h1 on the K3 cover for the ten exceptional types",
       [] { return verify_exceptional_types(); }},
      {"phi3", "thm1", "fiber dimensions, phi >= 3", [] { return verify_phi_at_least_three(); }},
      {"phi2", "thm2", "fiber dimensions, phi = 2, g = 3..20", [] { return verify_phi_two(20); }},
      {"phi1", "thm3", "fiber dimensions, phi = 1, g = 2..15", [] { return verify_phi_one(15); }},
      {"sextic", "desvan", "h1 on the K3 cover for kE1+E2+E3", [] { return verify_sextic_family(10); }},
      {"caps", "caps", "extendability caps", [] { return verify_extendability_caps(); }},
  };
  return s;
}

inline Report cmd_verify_tables(const std::string& scope) {
  Report rep;
  rep.command = "verify-tables";
  bool any = false;
  json tables = json::array();
  std::size_t failures = 0;
  for (const auto& s : scopes()) {
    if (scope != "all" && scope != s.name && scope != s.alias) continue;
    any = true;
    json rows = json::array();
    rep.text.push_back("== " + std::string(s.title));
    for (const auto& row : s.run()) {
      rows.push_back({{"name", row.name},
                      {"expected", row.expected},
                      {"computed", row.computed},
                      {"pass", row.pass},
                      {"certificate", row.certificate}});
      if (!row.pass) ++failures;
      rep.text.push_back(std::string(row.pass ? "  pass  " : "  FAIL  ") + row.name + ": expected " +
                         row.expected + ", computed " + row.computed +
                         (row.certificate.empty() ? "" : "  {" + row.certificate + "}"));
    }
    tables.push_back({{"scope", s.name}, {"title", s.title}, {"rows", rows}});
  }
  if (!any) throw CLI::ValidationError("--scope", "unknown scope '" + scope + "'");
  rep.result = {{"scope", scope}, {"tables", tables}, {"failures", failures}};
  if (failures) {
    rep.status = Status::Mismatch;
    rep.message = std::to_string(failures) + " row(s) differ from the reference tables";
  }
  rep.text.push_back(failures ? rep.message : "all rows match");
  return rep;
}

inline void emit(const Report& rep, bool as_json, std::ostream& out, std::ostream& err) {
  if (as_json) {
    out << rep.to_json().dump(2) << "\n";
    return;
  }
  for (const auto& line : rep.text) out << line << "\n";
  if (rep.status != Status::Ok && !rep.message.empty())
    err << status_name(rep.status) << ": " << rep.message << "\n";
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divisor classes, cohomology and moduli fiber dimensions on unnodal Enriques surfaces"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON");

  std::string expr, cls, scope = "all";
  int g = 0, phi_value = 0;
  long long kmax = 0;
  bool k3 = false;

  auto* analyze = app.add_subcommand("analyze", "full analysis of a decomposition type");
  analyze->add_option("type", expr, "e.g. \"2E1+2E{1,2}\" or \"4E1+4E2+K\"")->required();
  analyze->add_flag("--json", as_json, "emit JSON");

  auto* comps = app.add_subcommand("components", "list the components of E_{g,phi}");
  comps->add_option("--g", g, "genus")->required();
  comps->add_option("--phi", phi_value, "phi-invariant")->required();
  comps->add_flag("--json", as_json, "emit JSON");

  auto* ph = app.add_subcommand("phi", "phi-invariant of a class");
  ph->add_option("class", cls, "pic[c0,...,c9;eps], num[...] or a decomposition")->required();
  ph->add_flag("--json", as_json, "emit JSON");

  auto* co = app.add_subcommand("coh", "cohomology of a line bundle");
  co->add_option("class", cls, "pic[c0,...,c9;eps], num[...] or a decomposition")->required();
  co->add_flag("--k3", k3, "pull back to the K3 cover");
  co->add_flag("--json", as_json, "emit JSON");

  auto* en = app.add_subcommand("enumerate", "primitive isotropic classes with 0 < E.H <= kmax");
  en->add_option("class", cls, "pic[c0,...,c9;eps], num[...] or a decomposition")->required();
  en->add_option("--kmax", kmax, "largest pairing")->required()->check(CLI::PositiveNumber);
  en->add_flag("--json", as_json, "emit JSON");

  auto* vt = app.add_subcommand("verify-tables", "recompute the reference tables");
  vt->add_option("--scope", scope,
                 "all | exceptional (restanti) | phi3 (thm1) | phi2 (thm2) | phi1 (thm3) | "
                 "sextic (desvan) | caps");
  vt->add_flag("--json", as_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code(Status::Usage);
  }

  Report rep;
  try {
    if (*analyze) rep = cmd_analyze(expr);
    else if (*comps) rep = cmd_components(g, phi_value);
    else if (*ph) rep = cmd_phi(cls);
    else if (*co) rep = cmd_coh(cls, k3);
    else if (*en) rep = cmd_enumerate(cls, kmax);
    else rep = cmd_verify_tables(scope);
  } catch (const ParseError& e) {
    rep.status = Status::Usage;
    rep.message = e.what();
  } catch (const PreconditionError& e) {
    rep.status = Status::Usage;
    rep.message = e.what();
  } catch (const CLI::ValidationError& e) {
    rep.status = Status::Usage;
    rep.message = e.what();
  } catch (const InconclusiveError& e) {
    rep.status = Status::Inconclusive;
    rep.message = e.what();
  } catch (const std::exception& e) {
    rep.status = Status::Error;
    rep.message = e.what();
  }
  if (rep.command.empty()) rep.command = app.get_subcommands().front()->get_name();
  if (rep.status == Status::Usage || (rep.status == Status::Error && rep.text.empty())) {
    if (as_json) out << rep.to_json().dump(2) << "\n";
    else err << "error: " << rep.message << "\n";
    return exit_code(rep.status);
  }
  emit(rep, as_json, out, err);
  return exit_code(rep.status);
}

}  // namespace enriques::cli
