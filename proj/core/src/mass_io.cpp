#include "k3stab/mass_io.hpp"

#include <json.hpp>

namespace k3stab {

namespace {

using nlohmann::json;

json tail_to_json(const TailDescriptor& t) {
  return json{{"kind", t.kind == TailKind::Affine ? "affine" : "geometric"},
              {"anchor", t.anchor},
              {"start", t.start},
              {"step", t.step},
              {"ratio", t.ratio}};
}

TailDescriptor tail_from_json(const json& j) {
  TailDescriptor t;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "affine") {
    t.kind = TailKind::Affine;
  } else if (kind == "geometric") {
    t.kind = TailKind::Geometric;
  } else {
    throw DomainError("unknown tail kind '" + kind + "'");
  }
  t.anchor = j.at("anchor").get<std::int64_t>();
  t.start = j.at("start").get<double>();
  t.step = j.at("step").get<double>();
  t.ratio = j.at("ratio").get<double>();
  return t;
}

}  // namespace

std::string mass_to_json(const MassFunction& f) {
  json j{{"q", f.q},
         {"window", {f.window.lo, f.window.hi}},
         {"values", f.values},
         {"tail", {{"left", tail_to_json(f.left)},
                   {"right", tail_to_json(f.right)}}}};
  return j.dump();
}

MassFunction mass_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("mass JSON parse failure: ") + e.what());
  }
  try {
    MassFunction f;
    f.q = j.at("q").get<double>();
    const auto& w = j.at("window");
    if (!w.is_array() || w.size() != 2) {
      throw DomainError("mass JSON window must be [lo, hi]");
    }
    f.window.lo = w[0].get<std::int64_t>();
    f.window.hi = w[1].get<std::int64_t>();
    f.values = j.at("values").get<std::vector<double>>();
    if (static_cast<std::int64_t>(f.values.size()) != f.window.width()) {
      throw DomainError("mass JSON value count does not match the window");
    }
    f.left = tail_from_json(j.at("tail").at("left"));
    f.right = tail_from_json(j.at("tail").at("right"));
    if (!(f.q > 0.0)) throw DomainError("mass JSON weight must be positive");
    return f;
  } catch (const json::exception& e) {
    throw DomainError(std::string("mass JSON schema failure: ") + e.what());
  }
}

}  // namespace k3stab
