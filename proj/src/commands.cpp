#include "cpdskit/commands.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cpdskit/cpds.hpp"
#include "cpdskit/document.hpp"
#include "cpdskit/errors.hpp"
#include "cpdskit/groebner.hpp"
#include "cpdskit/primdec.hpp"
#include "cpdskit/problem.hpp"
#include "cpdskit/strata.hpp"
#include "cpdskit/text.hpp"

namespace cpdskit {

Point parse_point(std::string_view text, const RingPtr& ring) {
  Point alpha;
  std::string s(text);
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::string item = s.substr(start, comma == std::string::npos ? std::string::npos
                                                                  : comma - start);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw PreconditionError("point entry '" + item + "' is not NAME=VALUE");
    }
    std::string name = item.substr(0, eq);
    auto idx = ring->index_of(name);
    if (!idx || !ring->is_parameter(*idx)) {
      throw PreconditionError("'" + name + "' is not a parameter");
    }
    if (alpha.count(name)) throw PreconditionError("parameter '" + name + "' given twice");
    alpha[name] = parse_rational(item.substr(eq + 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  for (auto i : ring->parameter_indices()) {
    if (!alpha.count(ring->name(i))) {
      throw PreconditionError("parameter '" + ring->name(i) + "' has no value");
    }
  }
  return alpha;
}

namespace {

using json = nlohmann::ordered_json;

std::vector<Polynomial> descending(const Ideal& ideal) {
  const auto& els = ideal.groebner().elements;
  return {els.rbegin(), els.rend()};
}

json strings(const std::vector<Polynomial>& polys) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

json point_json(const Point& alpha) {
  json out = json::object();
  for (const auto& [name, value] : alpha) out[name] = to_string(value);
  return out;
}

class Session {
 public:
  explicit Session(const CommandRequest& request) : req_(request) {
    problem_ = parse_problem(req_.problem_text);
    if (!req_.order.empty()) {
      auto kind = parse_block_kind(req_.order);
      if (!kind) throw PreconditionError("unknown order '" + req_.order + "'");
      problem_ = problem_.with_order(*kind);
    }
    ideal_ = problem_.ideal(req_.ideal);
    const auto& o = problem_.options;
    options_.execution = req_.execution;
    options_.primdec.factor.max_kronecker = req_.max_kronecker.value_or(o.max_kronecker);
    options_.primdec.candidate_budget = o.candidate_budget;
    height_ = req_.height.value_or(o.height);
    if (req_.seed) {
      seed_ = *req_.seed;
    } else if (o.seed) {
      seed_ = o.seed;
    }
  }

  CommandResult run() {
    const std::string& c = req_.command;
    if (c == "gb") return gb();
    if (c == "cgs") return cgs();
    if (c == "primdec") return primdec();
    if (c == "radical") return radical_command();
    if (c == "cpds") return decomposition(Flavor::feasible);
    if (c == "cpds-min") return decomposition(Flavor::minimal);
    if (c == "hilbert") return decomposition(Flavor::hilbert);
    if (c == "verify") return verify();
    if (c == "sample") return sample();
    throw PreconditionError("unknown command '" + c + "'");
  }

 private:
  CommandResult ok(const std::string& text) const { return {kExitOk, text, {}}; }
  CommandResult ok(const json& doc) const { return {kExitOk, doc.dump(2) + "\n", {}}; }

  CommandResult gb() {
    Ideal canonical = ideal_.canonical();
    if (req_.json) return ok(json{{"groebner", strings(descending(canonical))}});
    return ok(canonical.to_string() + "\n");
  }

  CommandResult cgs() {
    auto segments = suzuki_sato_cgs(ideal_.generators());
    if (req_.json) {
      json out = json::array();
      for (const auto& s : segments) {
        out.push_back({{"cell",
                        {{"zero", strings(descending(s.cell.zero()))},
                         {"nonzero", strings(descending(s.cell.nonzero()))}}},
                       {"basis", strings(s.basis)}});
      }
      return ok(json{{"segments", out}});
    }
    std::string text;
    for (const auto& s : segments) {
      std::string basis = format_ideal(s.basis);
      text += "(" + s.cell.to_string() + ", {" + basis.substr(1, basis.size() - 2) + "})\n";
    }
    return ok(text);
  }

  CommandResult primdec() {
    auto comps = primary_decompose(ideal_, options_.primdec);
    if (req_.json) {
      json out = json::array();
      for (const auto& c : comps) {
        out.push_back({{"primary", strings(descending(c.primary))},
                       {"prime", strings(descending(c.prime))}});
      }
      return ok(json{{"components", out}});
    }
    std::string text;
    for (const auto& c : comps) {
      text += c.primary.to_string() + "  radical " + c.prime.to_string() + "\n";
    }
    return ok(text);
  }

  CommandResult radical_command() {
    Ideal r = radical(ideal_, options_.primdec);
    if (req_.json) return ok(json{{"radical", strings(descending(r))}});
    return ok(r.to_string() + "\n");
  }

  Cpds compute(Flavor flavor) const {
    switch (flavor) {
      case Flavor::feasible:
        return feasible_cpds(ideal_, options_);
      case Flavor::minimal:
        return minimal_feasible_cpds(ideal_, options_);
      case Flavor::hilbert:
        return hilbert_cpds(ideal_, options_);
    }
    return feasible_cpds(ideal_, options_);
  }

  static std::string render(const Cpds& cpds) {
    if (cpds.segments.empty()) return "{}\n";
    std::string text;
    for (const auto& s : cpds.segments) {
      text += s.to_string() + "\n";
      for (const auto& h : s.hilbert) {
        std::string mis;
        for (const auto& u : h.mis) mis += (mis.empty() ? "" : ", ") + u;
        text += "  certificate[" + std::to_string(h.component) + "]: U = {" + mis +
                "}, element " + h.element.to_string() + ", minpoly " +
                h.minpoly.to_string() + "\n";
      }
    }
    return text;
  }

  CommandResult decomposition(Flavor flavor) {
    Cpds cpds = canonical_order(compute(flavor));
    if (req_.json) return ok(emit_document(cpds));
    return ok(render(cpds));
  }

  Cpds load(Flavor fallback) const {
    if (req_.cpds_text.empty()) return canonical_order(compute(fallback));
    Cpds cpds = parse_document(req_.cpds_text, ideal_.ring());
    cpds.source = ideal_;
    return cpds;
  }

  VerifyLevel level() const {
    auto level = parse_verify_level(req_.level);
    if (!level) throw PreconditionError("unknown level '" + req_.level + "'");
    return *level;
  }

  std::vector<std::size_t> chosen_segments(const Cpds& cpds) const {
    std::vector<std::size_t> out;
    if (req_.segment) {
      if (*req_.segment >= cpds.segments.size()) {
        throw PreconditionError("segment index " + std::to_string(*req_.segment) +
                                " out of range (document has " +
                                std::to_string(cpds.segments.size()) + ")");
      }
      out.push_back(*req_.segment);
    } else {
      for (std::size_t i = 0; i < cpds.segments.size(); ++i) out.push_back(i);
    }
    return out;
  }

  // Rational points of a segment's cells within the height bound; a seed
  // draws them at random among the first few dozen instead of by height.
  std::vector<Point> points_of(const Segment& segment, std::size_t limit) const {
    std::size_t pool = seed_ ? std::max<std::size_t>(limit, 64) : limit;
    std::vector<Point> points;
    for (const auto& cell : segment.cell.cells()) {
      if (points.size() >= pool) break;
      for (auto& p : rational_points(cell, height_, pool - points.size())) {
        points.push_back(std::move(p));
      }
    }
    if (seed_) {
      std::mt19937_64 rng(*seed_);
      std::shuffle(points.begin(), points.end(), rng);
      if (points.size() > limit) points.resize(limit);
    }
    return points;
  }

  CommandResult verify() {
    VerifyLevel lvl = level();
    Cpds cpds = load(lvl == VerifyLevel::pd2 ? Flavor::feasible : Flavor::minimal);
    std::vector<std::pair<std::size_t, Point>> jobs;
    if (!req_.point.empty()) {
      Point alpha = parse_point(req_.point, ideal_.ring());
      if (req_.segment) {
        jobs.emplace_back(chosen_segments(cpds).front(), alpha);
      } else {
        for (std::size_t i = 0; i < cpds.segments.size(); ++i) {
          if (cpds.segments[i].cell.contains(alpha)) jobs.emplace_back(i, alpha);
        }
        if (jobs.empty()) {
          return {kExitVerificationFailed, {},
                  "point " + to_string(alpha) + " lies in no segment cell\n"};
        }
      }
    } else {
      for (auto i : chosen_segments(cpds)) {
        for (auto& p : points_of(cpds.segments[i], req_.points)) {
          jobs.emplace_back(i, std::move(p));
        }
      }
    }
    std::vector<VerifyReport> reports(jobs.size());
    for_each_index(jobs.size(), req_.execution, [&](std::size_t n) {
      reports[n] = verify_segment(ideal_, cpds.segments[jobs[n].first], jobs[n].second,
                                  lvl, options_.primdec);
    });
    bool passed = std::all_of(reports.begin(), reports.end(),
                              [](const auto& r) { return r.passed(); });
    CommandResult result;
    result.exit_code = passed ? kExitOk : kExitVerificationFailed;
    if (req_.json) {
      json out = json::array();
      for (std::size_t n = 0; n < jobs.size(); ++n) {
        json checks = json::array();
        for (const auto& c : reports[n].checks) {
          checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        }
        out.push_back({{"segment", jobs[n].first},
                       {"point", point_json(jobs[n].second)},
                       {"passed", reports[n].passed()},
                       {"checks", checks}});
      }
      result.out = json{{"level", to_string(lvl)}, {"passed", passed}, {"reports", out}}
                       .dump(2) + "\n";
    } else {
      for (std::size_t n = 0; n < jobs.size(); ++n) {
        result.out += "segment " + std::to_string(jobs[n].first) + " " +
                      reports[n].to_string();
      }
      result.out += std::string(passed ? "verification passed" : "verification FAILED") +
                    " (" + std::to_string(jobs.size()) + " points at level " +
                    to_string(lvl) + ")\n";
    }
    return result;
  }

  CommandResult sample() {
    Cpds cpds = load(Flavor::feasible);
    json out = json::array();
    std::string text;
    for (auto i : chosen_segments(cpds)) {
      const Segment& s = cpds.segments[i];
      auto points = points_of(s, req_.points);
      json pts = json::array();
      text += "segment " + std::to_string(i) + " " + s.cell.to_string() + "\n";
      for (const auto& p : points) {
        pts.push_back(point_json(p));
        text += "  " + to_string(p) + "\n";
      }
      if (points.empty()) {
        text += "  no rational point of height <= " + std::to_string(height_) + "\n";
      }
      out.push_back({{"segment", i}, {"cell", s.cell.to_string()}, {"points", pts}});
    }
    if (req_.json) return ok(json{{"height", height_}, {"segments", out}});
    return ok(text);
  }

  const CommandRequest& req_;
  ProblemFile problem_;
  Ideal ideal_;
  CpdsOptions options_;
  unsigned height_ = 5;
  std::optional<std::uint64_t> seed_;
};

}  // namespace

CommandResult run_command(const CommandRequest& request) {
  try {
    return Session(request).run();
  } catch (const ParseError& e) {
    return {kExitUsage, {}, std::string("parse error: ") + e.what() + "\n"};
  } catch (const PreconditionError& e) {
    return {kExitUsage, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const RingMismatch& e) {
    return {kExitUsage, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const ResourceLimit& e) {
    return {kExitResourceLimit, {}, std::string("resource limit: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kExitInternal, {}, std::string("internal error: ") + e.what() + "\n"};
  }
}

}  // namespace cpdskit
