#include "cihull/instance.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <sstream>
#include <utility>

#include "cihull/errors.hpp"

namespace cihull {
namespace {

using json = nlohmann::ordered_json;

double endpoint_from_json(const json& v, const char* side) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "inf" || s == "+inf") return kInf;
    if (s == "-inf") return -kInf;
    throw ParseError(std::string("unrecognized ") + side + " endpoint \"" + s +
                     "\" (expected a number, \"inf\", or \"-inf\")");
  }
  throw ParseError(std::string(side) + " endpoint must be a number or string");
}

json endpoint_to_json(double e) {
  if (e == kInf) return json("inf");
  if (e == -kInf) return json("-inf");
  return json(e);
}

}  // namespace

Instance::Instance(PointSet points_in, IntervalFamily family_in,
                   std::vector<std::string> labels_in, const Tolerances& tol)
    : points(std::move(points_in)),
      family(std::move(family_in)),
      labels(std::move(labels_in)) {
  if (points.empty()) throw InvalidInstance("instance needs at least one point");
  if (points.size() != family.size()) {
    std::ostringstream os;
    os << "point count " << points.size() << " does not match interval count "
       << family.size();
    throw InvalidInstance(os.str());
  }
  const std::size_t d = points.front().size();
  if (d == 0) throw InvalidInstance("points must have at least one coordinate");
  for (const Point& p : points) {
    if (p.size() != d)
      throw InvalidInstance("points have inconsistent dimensions");
    for (double c : p)
      if (!std::isfinite(c))
        throw InvalidInstance("point coordinates must be finite");
  }
  const double sep = tol.dedup * coordinate_scale(points);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (max_norm_dist(points[i], points[j]) <= sep) {
        std::ostringstream os;
        os << "points " << i << " and " << j << " coincide";
        throw InvalidInstance(os.str());
      }
  if (!labels.empty() && labels.size() != points.size())
    throw InvalidInstance("label count must be zero or match the point count");
}

Instance parse_instance(const std::string& text, const Tolerances& tol) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");
  if (!doc.contains("points")) throw ParseError("missing \"points\" key");
  if (!doc.contains("intervals")) throw ParseError("missing \"intervals\" key");

  const json& jpts = doc["points"];
  if (!jpts.is_array()) throw ParseError("\"points\" must be an array");
  PointSet points;
  points.reserve(jpts.size());
  for (const json& jp : jpts) {
    if (!jp.is_array()) throw ParseError("each point must be an array");
    Point p;
    p.reserve(jp.size());
    for (const json& c : jp) {
      if (!c.is_number()) throw ParseError("point coordinates must be numbers");
      p.push_back(c.get<double>());
    }
    points.push_back(std::move(p));
  }

  const json& jivs = doc["intervals"];
  if (!jivs.is_array()) throw ParseError("\"intervals\" must be an array");
  std::vector<Interval> intervals;
  intervals.reserve(jivs.size());
  for (const json& jiv : jivs) {
    if (!jiv.is_array() || jiv.size() != 2)
      throw ParseError("each interval must be a [lo, hi] pair");
    intervals.emplace_back(endpoint_from_json(jiv[0], "lower"),
                           endpoint_from_json(jiv[1], "upper"));
  }
  if (intervals.empty()) throw InvalidInstance("interval family must be nonempty");

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const json& jl = doc["labels"];
    if (!jl.is_array()) throw ParseError("\"labels\" must be an array");
    for (const json& l : jl) {
      if (!l.is_string()) throw ParseError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }

  return Instance(std::move(points), IntervalFamily(std::move(intervals)),
                  std::move(labels), tol);
}

std::string serialize_instance(const Instance& inst) {
  json doc;
  json jpts = json::array();
  for (const Point& p : inst.points) jpts.push_back(p);
  doc["points"] = std::move(jpts);
  json jivs = json::array();
  for (const Interval& iv : inst.family.intervals())
    jivs.push_back(json::array({endpoint_to_json(iv.lo), endpoint_to_json(iv.hi)}));
  doc["intervals"] = std::move(jivs);
  if (!inst.labels.empty()) doc["labels"] = inst.labels;
  return doc.dump(2);
}

}  // namespace cihull
