#include "legr/json.hpp"

namespace legr {

nlohmann::json json_of(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

nlohmann::json json_of(const Rational& v) { return {{"num", json_of(v.num())}, {"den", json_of(v.den())}}; }

nlohmann::json json_of(const QZPolynomial& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [key, c] : p.terms()) out.push_back({{"qh", key.first}, {"z", key.second}, {"c", c}});
    return out;
}

nlohmann::json json_of(const SqrtQValue& v) { return {{"a", json_of(v.a)}, {"b", json_of(v.b)}}; }

namespace {

const char* kind_name(EventKind k) {
    switch (k) {
    case EventKind::LeftCusp: return "L";
    case EventKind::RightCusp: return "R";
    case EventKind::Crossing: return "X";
    case EventKind::Marking: return "M";
    case EventKind::Vertex: return "V";
    case EventKind::BasePoint: return "B";
    }
    return "?";
}

nlohmann::json json_of_phi(const Resolution& phi) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& rho : phi) out.push_back(json_of(rho));
    return out;
}

}  // namespace

nlohmann::json json_of(const FrontDiagram& d) {
    nlohmann::json ev = nlohmann::json::array();
    for (const auto& e : d.events) {
        nlohmann::json j{{"kind", kind_name(e.kind)}, {"pos", e.pos}};
        switch (e.kind) {
        case EventKind::LeftCusp: j["mu"] = e.mu; break;
        case EventKind::RightCusp: j["bp"] = e.basepoint; break;
        case EventKind::Vertex:
            j["left"] = e.left;
            j["right"] = e.right;
            j["right_mu"] = e.right_mu;
            j["lbp"] = e.basepoint;
            break;
        case EventKind::BasePoint: j["sign"] = e.sign; break;
        default: break;
        }
        ev.push_back(j);
    }
    SliceTrace t = validate(d);
    return {{"name", d.name}, {"left_arity", d.left_arity}, {"left_mu", d.left_mu},
            {"right_arity", t.right_arity()}, {"right_mu", t.right_mu()}, {"events", ev}};
}

nlohmann::json json_of(const VertexInvolution& rho) {
    nlohmann::json out = nlohmann::json::array();
    for (auto [a, b] : rho.pairs) out.push_back({a, b});
    return out;
}

nlohmann::json json_of(const NormalRuling& r) {
    QZPolynomial w = r.weight();
    return {{"phi", json_of_phi(r.phi)}, {"switches", r.switches}, {"chi", r.chi}, {"s", r.s}, {"r", r.r},
            {"dep", r.dep}, {"A", r.A}, {"weight", json_of(w)[0]}};
}

nlohmann::json json_of(const AugReport& r) {
    nlohmann::json strata = nlohmann::json::array();
    for (const auto& s : r.strata)
        strata.push_back({{"phi", json_of_phi(s.phi)}, {"switches", s.switches}, {"chi", s.chi}, {"r", s.r},
                          {"A", s.A}, {"dim", s.dim}, {"count", json_of(s.count)}});
    nlohmann::json count = r.count.den() == 1 ? json_of(r.count.num()) : json_of(r.count);
    return {{"q", r.q}, {"count", count}, {"dim", r.dim}, {"aug", json_of(r.aug)}, {"strata", strata},
            {"warnings", r.warnings}};
}

}  // namespace legr
