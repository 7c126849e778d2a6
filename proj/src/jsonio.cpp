#include "codp/jsonio.hpp"

namespace codp {

namespace {

Json bigint_to_json(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() &&
      n <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(n));
  return Json(n.str());
}

// exact decimal expansion when the reduced denominator is 2^a * 5^b
std::string decimal_or_fraction(const Rat& r) {
  BigInt num = numerator(r), den = denominator(r);
  BigInt d = den;
  BigInt twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) return rat_to_string(r);
  BigInt digits = twos > fives ? twos : fives;
  BigInt scale = 1;
  for (BigInt i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled = num * scale / den;
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string body = scaled.str();
  std::size_t places = digits.convert_to<std::size_t>();
  if (body.size() <= places) body.insert(0, places + 1 - body.size(), '0');
  if (places > 0) body.insert(body.size() - places, ".");
  return (negative ? "-" : "") + body;
}

}  // namespace

Rat rat_from_json(const Json& node) {
  if (node.is_number_integer()) return Rat(node.get<std::int64_t>());
  if (node.is_string()) return rat_from_string(node.get<std::string>());
  if (node.is_object() && node.contains("num") && node.contains("den")) {
    auto part = [](const Json& p) -> BigInt {
      if (p.is_number_integer()) return BigInt(p.get<std::int64_t>());
      if (p.is_string()) return BigInt(p.get<std::string>());
      throw ParseError("rational parts must be integers or strings");
    };
    BigInt den = part(node.at("den"));
    if (den == 0) throw ParseError("zero denominator in rational");
    return Rat(part(node.at("num")), den);
  }
  throw ParseError("expected a rational (integer, \"n/d\", or {num, den})");
}

Json rat_to_json(const Rat& r, bool render_decimal) {
  if (render_decimal) return Json(decimal_or_fraction(r));
  Json out = Json::object();
  out["num"] = bigint_to_json(numerator(r));
  out["den"] = bigint_to_json(denominator(r));
  return out;
}

Json labels_to_json(const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (const auto& label : labels) out.push_back(label);
  return out;
}

Json dp_to_json(const DesignProblem& d) {
  Json out = Json::object();
  Json pairs = Json::array();
  for (const auto& [f, r] : d.feasible_pairs())
    pairs.push_back(Json::array({f, r}));
  out["feasible"] = std::move(pairs);
  return out;
}

Json uncertain_dp_to_json(const Uncertain<DesignProblem>& value,
                          bool render_decimal) {
  Json out = Json::object();
  switch (value.kind()) {
    case Monad::identity:
      out["value"] = dp_to_json(value.value());
      break;
    case Monad::powerset: {
      Json values = Json::array();
      for (const auto& d : value.support()) values.push_back(dp_to_json(d));
      out["values"] = std::move(values);
      break;
    }
    case Monad::interval:
      out["lo"] = dp_to_json(value.lo());
      out["hi"] = dp_to_json(value.hi());
      break;
    case Monad::dist: {
      Json entries = Json::array();
      for (std::size_t i = 0; i < value.support().size(); ++i) {
        Json entry = Json::object();
        entry["value"] = dp_to_json(value.support()[i]);
        entry["prob"] = rat_to_json(value.weights()[i], render_decimal);
        entries.push_back(std::move(entry));
      }
      out["dist"] = std::move(entries);
      break;
    }
    default:
      throw MonadMismatch("cannot serialize the harness-only instance");
  }
  return out;
}

}  // namespace codp
