#include "dgq/differential.hpp"

#include "dgq/errors.hpp"

#include <sstream>

namespace dgq {

Differential::Differential(GradedQuiver quiver, std::vector<Element> images)
    : quiver_(std::move(quiver)), images_(std::move(images)) {
  if (images_.size() != quiver_.arrow_count()) {
    throw InvalidInput("differential must assign one element per arrow");
  }
}

Differential::Differential(GradedQuiver quiver)
    : quiver_(std::move(quiver)), images_(quiver_.arrow_count()) {}

Element apply(const Differential& d, const Path& p) {
  Element out;
  const auto& arrows = p.arrows();
  const GradedQuiver& q = d.quiver();
  int prefix_hdeg = 0;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const Element& da = d.on_arrow(arrows[i]);
    if (!da.is_zero()) {
      const Path prefix = p.slice(q, 0, i);
      const Path suffix = p.slice(q, i + 1, arrows.size());
      const bool negate = (prefix_hdeg % 2) != 0;
      for (const auto& [mid, c] : da) {
        auto left = prefix.concat(mid);
        if (!left) continue;
        auto full = left->concat(suffix);
        if (!full) continue;
        out.add_term(*full, negate ? Rational(-c) : c);
      }
    }
    prefix_hdeg += q.arrow(arrows[i]).hdeg;
  }
  return out;
}

Element apply(const Differential& d, const Element& u) {
  if (!u.is_hdeg_homogeneous()) throw InvalidInput("apply: element is not homogeneous in homological degree");
  Element out;
  for (const auto& [p, c] : u) {
    Element dp = apply(d, p);
    dp *= c;
    out += dp;
  }
  return out;
}

namespace {

std::string describe(const GradedQuiver& q, const Element& e, std::size_t max_terms = 4) {
  std::ostringstream os;
  std::size_t n = 0;
  for (const auto& [p, c] : e) {
    if (n++ == max_terms) {
      os << " + …";
      break;
    }
    if (n > 1) os << " + ";
    os << "(" << to_string(c) << ")";
    if (p.is_idempotent()) {
      os << "e" << p.source();
    }
    for (ArrowIndex a : p.arrows()) os << "·" << q.arrow(a).id;
  }
  return os.str();
}

}  // namespace

CheckReport check_d_squared(const Differential& d, int max_adams) {
  const GradedQuiver& q = d.quiver();
  if (max_adams < q.max_adeg()) {
    throw InvalidInput("check_d_squared: truncation below the largest arrow Adams degree");
  }
  const std::string note =
      "d^2 checked on every arrow up to Adams degree " + std::to_string(max_adams) +
      "; by the graded Leibniz rule this implies d^2 = 0 on the whole path algebra";
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const Element dd = truncate_adams(apply(d, d.on_arrow(a)), max_adams);
    if (!dd.is_zero()) {
      return CheckReport::fail("d_squared", "arrow " + q.arrow(a).id + ": d^2 = " + describe(q, dd), note);
    }
  }
  return CheckReport::pass("d_squared", note);
}

CheckReport check_grading(const Differential& d, bool adams_graded) {
  const GradedQuiver& q = d.quiver();
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    for (const auto& [p, c] : d.on_arrow(a)) {
      std::string problem;
      if (p.source() != arr.source || p.target() != arr.target) {
        problem = "endpoints differ from the arrow's";
      } else if (p.hdeg() != arr.hdeg + 1) {
        problem = "homological degree " + std::to_string(p.hdeg()) + " != " + std::to_string(arr.hdeg + 1);
      } else if (adams_graded && p.adeg() != arr.adeg) {
        problem = "Adams degree " + std::to_string(p.adeg()) + " != " + std::to_string(arr.adeg);
      } else if (p.length() < 2) {
        problem = "term of path length " + std::to_string(p.length()) + " violates minimality";
      }
      if (!problem.empty()) {
        return CheckReport::fail("grading", "arrow " + arr.id + ": " + problem);
      }
    }
  }
  return CheckReport::pass("grading", adams_graded ? "homological and Adams degrees, endpoints, minimality"
                                                   : "homological degree, endpoints, minimality");
}

}  // namespace dgq
