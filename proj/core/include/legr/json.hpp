#pragma once

#include "legr/algebra.hpp"
#include "legr/augcount.hpp"
#include "legr/front_model.hpp"
#include "legr/rulings.hpp"

#include <nlohmann/json.hpp>

namespace legr {

// integers that fit in 64 bits are emitted as numbers, larger ones as strings
nlohmann::json json_of(const BigInt& v);
nlohmann::json json_of(const Rational& v);            // {"num": .., "den": ..}
nlohmann::json json_of(const QZPolynomial& p);        // [{"qh": h, "z": k, "c": c}] sorted by (h, k)
nlohmann::json json_of(const SqrtQValue& v);          // {"a": rational, "b": rational}
nlohmann::json json_of(const FrontDiagram& d);
nlohmann::json json_of(const VertexInvolution& rho);  // [[a, b], ...]
nlohmann::json json_of(const NormalRuling& r);
nlohmann::json json_of(const AugReport& r);

}  // namespace legr
