#include "troplift/report.hpp"

#include <json.hpp>

namespace troplift {

namespace {

using Json = nlohmann::ordered_json;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> generator_strings(const Ideal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.gens) out.push_back(to_string(g, ideal.ctx.slot_names()));
  return out;
}

std::string extension_string(const ExtContextPtr& ext) {
  return to_string(ext->minpoly(), ext->symbol());
}

bool has_extension(const TruncatedPoint& p) { return p.ext && !p.ext->is_trivial(); }

}  // namespace

std::string format_ideal(const Ideal& ideal) {
  if (ideal.gens.empty()) return "ideal: 0";
  return "ideal: " + join(generator_strings(ideal), ", ");
}

std::string format_residual(const ResidualOrder& r) { return r ? to_string(*r) : "inf"; }

std::string lift_text(const LiftResult& result, const std::vector<std::string>& names) {
  const auto& p = result.point;
  std::string out = "N: " + std::to_string(p.N) + "\n";
  out += p.N == 1 ? std::string("point:\n") : "point (t stands for t^(1/" + std::to_string(p.N) + ")):\n";
  for (std::size_t i = 0; i < p.coords.size(); ++i)
    out += "  " + names[i] + " = " + p.coords[i].to_string() + "\n";
  if (p.exact) out += "exact: yes\n";
  out += "extension: " + (has_extension(p) ? extension_string(p.ext) : std::string("none")) + "\n";
  out += "trace:\n";
  for (std::size_t k = 0; k < result.trace.levels.size(); ++k) {
    const auto& l = result.trace.levels[k];
    std::vector<std::string> w, u;
    for (const auto& e : l.omega.entries) w.push_back(to_string(e));
    for (const auto& e : l.u) u.push_back(to_string(e));
    out += "  " + std::to_string(k + 1) + ": omega = (" + join(w, ", ") + "), u = (" + join(u, ", ") +
           "), vars = " + join(l.vars, ", ") + "\n";
  }
  std::vector<std::string> r;
  for (const auto& o : result.residuals) r.push_back(format_residual(o));
  out += "residual orders: " + join(r, ", ") + "\n";
  return out;
}

std::string lift_json(const LiftResult& result, const std::vector<std::string>& names) {
  const auto& p = result.point;
  Json j;
  j["N"] = p.N;
  Json point = Json::array();
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    Json terms = Json::array();
    for (const auto& [k, c] : p.coords[i].terms())
      terms.push_back(Json{{"coeff", to_string(c)}, {"t_exp", to_string(make_rational(k, p.N))}});
    point.push_back(Json{{"var", names[i]}, {"terms", terms}});
  }
  j["point"] = point;
  j["extension"] = Json{{"minpoly", has_extension(p) ? Json(extension_string(p.ext)) : Json(nullptr)}};
  Json trace = Json::array();
  for (const auto& l : result.trace.levels) {
    Json w = Json::array(), u = Json::array();
    for (const auto& e : l.omega.entries) w.push_back(to_string(e));
    for (const auto& e : l.u) u.push_back(to_string(e));
    trace.push_back(Json{{"omega", w}, {"u", u}, {"vars", l.vars}});
  }
  j["trace"] = trace;
  Json res = Json::array();
  for (const auto& o : result.residuals) res.push_back(format_residual(o));
  j["residual_orders"] = res;
  return j.dump(2);
}

std::string ideal_json(const Ideal& ideal) {
  Json j;
  j["ideal"] = generator_strings(ideal);
  return j.dump(2);
}

std::string rdz_text(const RdzResult& result) {
  std::string out;
  if (result.ideal.ctx.N != 1)
    out += "N: " + std::to_string(result.ideal.ctx.N) + " (t stands for t^(1/" +
           std::to_string(result.ideal.ctx.N) + "))\n";
  out += format_ideal(result.ideal) + "\n";
  out += "forms added: " + std::to_string(result.forms.size()) + "\n";
  return out;
}

std::string rdz_json(const RdzResult& result) {
  Json j;
  j["N"] = result.ideal.ctx.N;
  j["ideal"] = generator_strings(result.ideal);
  Json forms = Json::array();
  for (const auto& f : result.forms) {
    Json a = Json::array();
    for (const auto& c : f.coeffs) a.push_back(c.get_str());
    forms.push_back(Json{{"coeffs", a}, {"form", to_string(f.cleared, result.ideal.ctx.slot_names())}});
  }
  j["forms"] = forms;
  j["attempts"] = result.attempts;
  return j.dump(2);
}

}  // namespace troplift
