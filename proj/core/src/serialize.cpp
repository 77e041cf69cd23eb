#include "permeq/serialize.hpp"

#include "permeq/errors.hpp"
#include "permeq/notation.hpp"

namespace permeq {

Json perm_to_json(const Perm& p) {
  Json j;
  j["n"] = p.degree();
  j["image"] = std::vector<Point>(p.image().begin(), p.image().end());
  return j;
}

Perm perm_from_json(const Json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    auto image = j.at("image").get<std::vector<Point>>();
    if (image.size() != n)
      throw InvalidPermutation("image has " + std::to_string(image.size()) +
                               " entries but n = " + std::to_string(n));
    return Perm::from_image(std::move(image));
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidPermutation(std::string("malformed permutation JSON: ") +
                             ex.what());
  }
}

Json qvalue_to_json(const QValue& q) {
  Json j;
  switch (q.kind()) {
    case QValue::Kind::Finite:
      j["q"] = q.value();
      break;
    case QValue::Kind::Infinite:
      j["q"] = "infinity";
      break;
    case QValue::Kind::AtLeast:
      j["q_at_least"] = q.value();
      break;
  }
  return j;
}

Json drange_to_json(const DRange& dr) {
  Json j;
  j["d"] = dr.d();
  j["members"] = dr.members();
  return j;
}

Json reduced_form_to_json(const ReducedForm& rf) {
  Json j;
  j["case"] = to_string(rf.case_tag);
  j["alpha"] = format_cycles(rf.alpha);
  j["beta"] = format_cycles(rf.beta);
  j["exponent"] = rf.exponent;
  j["reducible"] = rf.reducible_to_power_conjugate();
  j["y_of_x"] = rf.forward.text;
  j["x_of_y"] = rf.backward.text;
  return j;
}

Json report_to_json(const SolutionReport& report) {
  Json j;
  j["verdict"] = to_string(report.verdict);
  j["reason"] = report.reason;
  Json sols = Json::array();
  for (const Perm& y : report.solutions)
    sols.push_back(format_cycles(y));
  j["solutions"] = std::move(sols);
  Json log = Json::array();
  for (const HypothesisEntry& h : report.hypotheses_log) {
    Json entry;
    entry["condition"] = h.condition;
    Json numbers = Json::object();
    for (const auto& [name, value] : h.numbers)
      numbers[name] = value;
    entry["numbers"] = std::move(numbers);
    entry["pass"] = h.pass;
    log.push_back(std::move(entry));
  }
  j["hypotheses_log"] = std::move(log);
  return j;
}

}  // namespace permeq
