// Command-line front door for the Coxeter toolkit. One subcommand per
// operation family; tables by default, stable JSON under --json.
//
// Exit codes: 0 success, 1 usage/parse/precondition, 2 numerical
// ambiguity, 3 a verifier produced counterexamples, 4 resource limit.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cox/ball.hpp"
#include "cox/classify.hpp"
#include "cox/element.hpp"
#include "cox/errors.hpp"
#include "cox/hypothesis.hpp"
#include "cox/parabolic.hpp"
#include "cox/system.hpp"

using nlohmann::ordered_json;

namespace {

struct Flags {
  std::string file;
  bool json = false;
  double epsilon = cox::kDefaultSignTolerance;

  std::string t;
  bool maximal = false;
  int radius = -1;  // -1: not supplied
  bool count_only = false;
  bool dump = false;
  std::string word;
  std::string other;
  std::string target_gen;
  std::string lemma;
  std::string chain;
  std::string probe;
  int margin = 4;
  int window = 3;
};

struct CommandResult {
  ordered_json verdict;
  std::vector<std::string> lines;
  ordered_json system = nullptr;
  std::string digest;        // empty: omitted from output
  bool counterexamples = false;  // exit 3
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw cox::PreconditionError("cannot read '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

cox::BallOptions ball_options_from_env() {
  cox::BallOptions opts;
  if (const char* env = std::getenv("COX_MAX_BALL")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
      throw cox::PreconditionError("COX_MAX_BALL must be a positive integer");
    }
    opts.max_elements = v;
  }
  return opts;
}

cox::CoxeterSystem load_system(const Flags& flags) {
  return cox::parse_system(read_file(flags.file), flags.epsilon);
}

std::string digest_hex(const cox::CoxeterSystem& system) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << cox::digest(system);
  return os.str();
}

ordered_json matrix_json(const cox::CoxeterMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rank(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.rank(); ++j) {
      const cox::Bond b = m.at(i, j);
      if (b.is_inf()) {
        row.push_back("inf");
      } else {
        row.push_back(b.value());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json system_json(const std::vector<std::string>& names,
                         const cox::CoxeterMatrix& matrix) {
  return ordered_json{{"names", names}, {"matrix", matrix_json(matrix)}};
}

ordered_json labels_json(const cox::CoxeterSystem& system, cox::GenSubset t) {
  ordered_json out = ordered_json::array();
  for (int i : t.indices()) out.push_back(system.name(i));
  return out;
}

ordered_json order_json(cox::Order order) {
  if (order.is_inf()) return "inf";
  return order.value();
}

ordered_json bond_json(cox::Bond bond) {
  if (bond.is_inf()) return "inf";
  return bond.value();
}

std::string nf_string(const cox::CoxeterSystem& system,
                      const std::vector<int>& word) {
  return cox::format_word(system, word);
}

cox::GenSubset subset_flag(const cox::CoxeterSystem& system,
                           const std::string& value) {
  return cox::subset_from_labels(system, value);
}

int generator_flag(const cox::CoxeterSystem& system, const std::string& label,
                   const char* flag) {
  auto idx = system.index_of(label);
  if (!idx) {
    throw cox::PreconditionError(std::string(flag) + ": unknown generator '" +
                                 label + "'");
  }
  return *idx;
}

// ------------------------------------------------------------------ //

CommandResult run_validate(const Flags& flags) {
  const cox::Diagram diagram = cox::parse_diagram(read_file(flags.file));
  const std::vector<cox::Violation> violations = cox::validate(diagram.matrix);

  CommandResult result;
  result.system = system_json(diagram.names, diagram.matrix);
  result.verdict["valid"] = violations.empty();
  ordered_json list = ordered_json::array();
  for (const cox::Violation& v : violations) {
    const char* kind = v.kind == cox::Violation::Kind::Symmetry ? "symmetry"
                       : v.kind == cox::Violation::Kind::Diagonal
                           ? "diagonal"
                           : "off_diagonal";
    list.push_back(ordered_json{
        {"kind", kind}, {"i", v.i}, {"j", v.j}, {"message", v.message()}});
  }
  result.verdict["violations"] = std::move(list);

  result.lines.push_back(violations.empty() ? "valid      yes"
                                            : "valid      no");
  for (const cox::Violation& v : violations) {
    result.lines.push_back("  " + v.message());
  }
  if (violations.empty()) {
    const cox::CoxeterSystem system =
        cox::CoxeterSystem::create(diagram.names, diagram.matrix, flags.epsilon);
    result.verdict["canonical"] = cox::serialize(system);
    result.digest = digest_hex(system);
    result.lines.push_back("canonical  (" +
                           std::to_string(system.rank()) + " generators)");
  }
  return result;
}

CommandResult run_components(const Flags& flags) {
  const cox::CoxeterSystem system = load_system(flags);
  CommandResult result;
  result.system = system_json(system.names(), system.matrix());
  result.digest = digest_hex(system);

  ordered_json comps = ordered_json::array();
  std::string comps_line = "components";
  for (cox::GenSubset c : cox::irreducible_components(system)) {
    comps.push_back(labels_json(system, c));
    comps_line += "  " + cox::format_subset(system, c);
  }
  ordered_json edges = ordered_json::array();
  for (int i = 0; i < system.rank(); ++i) {
    for (int j = i + 1; j < system.rank(); ++j) {
      const cox::Bond m = cox::product_order(system, i, j);
      if (!m.at_least(3)) continue;
      edges.push_back(ordered_json{{"a", system.name(i)},
                                   {"b", system.name(j)},
                                   {"m", bond_json(m)}});
      result.lines.push_back("edge        " + system.name(i) + " -- " +
                             system.name(j) + "  m=" + m.str());
    }
  }
  result.verdict["components"] = std::move(comps);
  result.verdict["edges"] = std::move(edges);
  result.lines.insert(result.lines.begin(), comps_line);
  return result;
}

CommandResult run_classify(const Flags& flags, bool t_given) {
  const cox::CoxeterSystem system = load_system(flags);
  const cox::GenSubset t = t_given ? subset_flag(system, flags.t)
                                   : cox::GenSubset::full(system.rank());
  const cox::FinitenessVerdict verdict = cox::classify_subset(system, t);
  const cox::CoxeterSystem sub = cox::restrict(system, t);

  CommandResult result;
  result.system = system_json(system.names(), system.matrix());
  result.digest = digest_hex(system);
  result.verdict["subset"] = labels_json(system, t);
  result.verdict["restriction"] = system_json(sub.names(), sub.matrix());
  ordered_json comps = ordered_json::array();
  for (const cox::ClassifiedComponent& c : verdict.components) {
    comps.push_back(ordered_json{{"gens", labels_json(system, c.gens)},
                                 {"type", c.type.str()},
                                 {"order", order_json(c.order)}});
    result.lines.push_back("component  " +
                           cox::format_subset(system, c.gens) + "  type " +
                           c.type.str() + "  order " + c.order.str());
  }
  result.verdict["components"] = std::move(comps);
  result.verdict["finite"] = verdict.finite;
  result.verdict["order"] = order_json(verdict.total_order);
  result.lines.insert(result.lines.begin(),
                      "subset     " + cox::format_subset(system, t));
  result.lines.push_back(std::string("finite     ") +
                         (verdict.finite ? "yes" : "no"));
  result.lines.push_back("order      " + verdict.total_order.str());
  return result;
}

CommandResult run_spherical(const Flags& flags) {
  const cox::CoxeterSystem system = load_system(flags);
  CommandResult result;
  result.system = system_json(system.names(), system.matrix());
  result.digest = digest_hex(system);
  if (flags.maximal) {
    ordered_json list = ordered_json::array();
    for (cox::GenSubset u : cox::maximal_spherical_subsets(system)) {
      list.push_back(labels_json(system, u));
      result.lines.push_back("maximal    " + cox::format_subset(system, u));
    }
    result.verdict["maximal_spherical"] = std::move(list);
  } else {
    const cox::GenSubset t = subset_flag(system, flags.t);
    const bool spherical = cox::is_spherical(system, t);
    result.verdict["subset"] = labels_json(system, t);
    result.verdict["spherical"] = spherical;
    result.lines.push_back("subset     " + cox::format_subset(system, t));
    result.lines.push_back(std::string("spherical  ") +
                           (spherical ? "yes" : "no"));
  }
  return result;
}

CommandResult run_essential(const Flags& flags, bool t_given) {
  const cox::CoxeterSystem system = load_system(flags);
  CommandResult result;
  result.system = system_json(system.names(), system.matrix());
  result.digest = digest_hex(system);
  if (t_given) {
    const cox::GenSubset t = subset_flag(system, flags.t);
    const cox::GenSubset tilde = cox::essential_subset(system, t);
    result.verdict["subset"] = labels_json(system, t);
    result.verdict["essential"] = labels_json(system, tilde);
    result.lines.push_back("subset     " + cox::format_subset(system, t));
    result.lines.push_back("essential  " + cox::format_subset(system, tilde));
  } else {
    const cox::GenSubset tilde = cox::essential_subset(system);
    result.verdict["essential"] = labels_json(system, tilde);
    result.lines.push_back("essential  " + cox::format_subset(system, tilde));
  }
  return result;
}

CommandResult run_ball(const Flags& flags) {
  const cox::CoxeterSystem system = load_system(flags);
  const cox::BallOptions opts = ball_options_from_env();
  const cox::CayleyBall ball =
      flags.radius < 0 ? cox::enumerate_group(system, opts)
                       : cox::enumerate_ball(system, flags.radius, opts);

  CommandResult result;
  result.system = system_json(system.names(), system.matrix());
  result.digest = digest_hex(system);
  result.verdict["radius"] = ball.radius();
  result.verdict["size"] = ball.size();
  result.verdict["saturated"] = ball.saturated();
  result.verdict["max_length"] = ball.max_length();
  ordered_json counts = ordered_json::array();
  for (int l = 0; l <= ball.max_length(); ++l) counts.push_back(ball.count_at(l));
  result.verdict["counts"] = std::move(counts);

  result.lines.push_back("radius     " + std::to_string(ball.radius()));
  result.lines.push_back("size       " + std::to_string(ball.size()));
  result.lines.push_back(std::string("saturated  ") +
                         (ball.saturated() ? "yes" : "no"));
  if (!flags.count_only) {
    for (int l = 0; l <= ball.max_length(); ++l) {
      result.lines.push_back("  length " + std::to_string(l) + "  " +
                             std::to_string(ball.count_at(l)));
    }
  }
  if (flags.dump && !flags.count_only) {
    ordered_json elements = ordered_json::array();
    ordered_json adjacency = ordered_json::array();
    for (std::size_t i = 0; i < ball.size(); ++i) {
      const cox::Element& w = ball.at(i);
      elements.push_back(ordered_json{{"nf", nf_string(system, w.word())},
                                      {"length", w.length()}});
      ordered_json row = ordered_json::array();
      for (int s = 0; s < system.rank(); ++s) {
        row.push_back(ball.adjacency(i, s));
      }
      adjacency.push_back(std::move(row));
    }
    result.verdict["elements"] = std::move(elements);
    result.verdict["adjacency"] = std::move(adjacency);
    for (std::size_t i = 0; i < ball.size(); ++i) {
      result.lines.push_back("  " + std::to_string(i) + "  " +
                             nf_string(system, ball.at(i).word()));
    }
  }
  return result;
}

CommandResult run_nf(const Flags& flags) {
  const cox::CoxeterSystem system = load_system(flags);
  const std::vector<int> letters = cox::word_from_labels(system, flags.word);
  const cox::Element w = cox::element_from_word(system, letters);

  CommandResult result;
  result.system = system_json(system.names(), system.matrix());
  result.digest = digest_hex(system);
  result.verdict["word"] = flags.word;
  result.verdict["nf"] = nf_string(system, cox::normal_form(w));
  result.verdict["length"] = w.length();
  result.lines.push_back("word       " + flags.word);
  result.lines.push_back("nf         " + nf_string(system, w.word()));
  result.lines.push_back("length     " + std::to_string(w.length()));
  return result;
}

CommandResult run_descents(const Flags& flags) {
  const cox::CoxeterSystem system = load_system(flags);
  const cox::Element w =
      cox::element_from_word(system, cox::word_from_labels(system, flags.word));

  CommandResult result;
  result.system = system_json(system.names(), system.matrix());
  result.digest = digest_hex(system);
  const cox::GenSubset right = cox::descent_set(w, cox::Side::Right);
  const cox::GenSubset left = cox::descent_set(w, cox::Side::Left);
  const cox::GenSubset sup = cox::support(w);
  result.verdict["word"] = flags.word;
  result.verdict["nf"] = nf_string(system, w.word());
  result.verdict["right"] = labels_json(system, right);
  result.verdict["left"] = labels_json(system, left);
  result.verdict["support"] = labels_json(system, sup);
  result.lines.push_back("nf         " + nf_string(system, w.word()));
  result.lines.push_back("right      " + cox::format_subset(system, right));
  result.lines.push_back("left       " + cox::format_subset(system, left));
  result.lines.push_back("support    " + cox::format_subset(system, sup));
  return result;
}

CommandResult run_distance(const Flags& flags) {
  const cox::CoxeterSystem system = load_system(flags);
  const cox::Element a =
      cox::element_from_word(system, cox::word_from_labels(system, flags.word));
  const cox::Element b = cox::element_from_word(
      system, cox::word_from_labels(system, flags.other));
  const cox::Element shift = cox::mul(cox::inverse(a), b);
  const int d = cox::word_distance(a, b);

  CommandResult result;
  result.system = system_json(system.names(), system.matrix());
  result.digest = digest_hex(system);
  result.verdict["word"] = flags.word;
  result.verdict["other"] = flags.other;
  result.verdict["nf_word"] = nf_string(system, a.word());
  result.verdict["nf_other"] = nf_string(system, b.word());
  result.verdict["separation"] = nf_string(system, shift.word());
  result.verdict["distance"] = d;
  result.verdict["equal"] = cox::equals(a, b);
  result.lines.push_back("nf(word)   " + nf_string(system, a.word()));
  result.lines.push_back("nf(other)  " + nf_string(system, b.word()));
  result.lines.push_back("distance   " + std::to_string(d));
  result.lines.push_back(std::string("equal      ") +
                         (cox::equals(a, b) ? "yes" : "no"));
  return result;
}

CommandResult run_index(const Flags& flags) {
  const cox::CoxeterSystem system = load_system(flags);
  const cox::GenSubset t = subset_flag(system, flags.t);
  const cox::Order idx = cox::index(system, t);

  CommandResult result;
  result.system = system_json(system.names(), system.matrix());
  result.digest = digest_hex(system);
  result.verdict["subset"] = labels_json(system, t);
  result.verdict["index"] = order_json(idx);
  result.lines.push_back("subset     " + cox::format_subset(system, t));
  result.lines.push_back("index      " + idx.str());
  if (!flags.word.empty()) {
    const cox::Element w = cox::element_from_word(
        system, cox::word_from_labels(system, flags.word));
    const cox::CosetDecomposition dec = cox::coset_decompose(w, t);
    ordered_json d;
    d["word"] = flags.word;
    d["rep"] = nf_string(system, dec.rep.word());
    d["inner"] = nf_string(system, dec.inner.word());
    d["rep_minimal"] = cox::is_minimal_coset_rep(dec.rep, t);
    d["lengths_add"] =
        dec.rep.length() + dec.inner.length() == w.length();
    result.verdict["decomposition"] = std::move(d);
    result.lines.push_back("rep        " + nf_string(system, dec.rep.word()));
    result.lines.push_back("inner      " +
                           nf_string(system, dec.inner.word()));
  }
  return result;
}

CommandResult run_theorem_set(const Flags& flags) {
  const cox::CoxeterSystem system = load_system(flags);
  const cox::GenSubset t = subset_flag(system, flags.t);
  const cox::GenSubset gens = cox::theorem_generator_set(system, t);
  const cox::GenSubset tilde = cox::essential_subset(system, t);

  CommandResult result;
  result.system = system_json(system.names(), system.matrix());
  result.digest = digest_hex(system);
  result.verdict["subset"] = labels_json(system, t);
  result.verdict["t_tilde"] = labels_json(system, tilde);
  result.verdict["generators"] = labels_json(system, gens);
  result.lines.push_back("subset     " + cox::format_subset(system, t));
  result.lines.push_back("t~         " + cox::format_subset(system, tilde));
  result.lines.push_back("generators " + cox::format_subset(system, gens));
  return result;
}

CommandResult run_check_corollary(const Flags& flags) {
  const cox::CoxeterSystem system = load_system(flags);
  const cox::GenSubset t = subset_flag(system, flags.t);
  const std::vector<cox::CorollaryWitness> witnesses =
      cox::check_corollary(system, t);

  CommandResult result;
  result.system = system_json(system.names(), system.matrix());
  result.digest = digest_hex(system);
  result.verdict["subset"] = labels_json(system, t);
  result.verdict["t_tilde"] =
      labels_json(system, cox::essential_subset(system, t));
  ordered_json list = ordered_json::array();
  for (const cox::CorollaryWitness& w : witnesses) {
    list.push_back(ordered_json{{"u", labels_json(system, w.u)},
                                {"s", system.name(w.s)},
                                {"u0", system.name(w.u0)},
                                {"condition", w.condition}});
    result.lines.push_back("witness    U=" + cox::format_subset(system, w.u) +
                           "  s=" + system.name(w.s) + "  u0=" +
                           system.name(w.u0) + "  condition " +
                           std::to_string(w.condition));
  }
  result.verdict["witnesses"] = std::move(list);
  result.verdict["count"] = witnesses.size();
  result.lines.insert(result.lines.begin(),
                      "subset     " + cox::format_subset(system, t));
  result.lines.push_back("witnesses  " + std::to_string(witnesses.size()));
  return result;
}

CommandResult run_certificate(const Flags& flags) {
  const cox::CoxeterSystem system = load_system(flags);
  const std::vector<cox::QuasidenseCertificate> certificates =
      cox::check_quasidense_certificate(system);

  CommandResult result;
  result.system = system_json(system.names(), system.matrix());
  result.digest = digest_hex(system);
  ordered_json list = ordered_json::array();
  for (const cox::QuasidenseCertificate& c : certificates) {
    list.push_back(ordered_json{{"u", labels_json(system, c.u)},
                                {"s0", system.name(c.s0)}});
    result.lines.push_back("certified  U=" + cox::format_subset(system, c.u) +
                           "  s0=" + system.name(c.s0));
  }
  result.verdict["certificates"] = std::move(list);
  result.verdict["count"] = certificates.size();
  result.lines.push_back("count      " + std::to_string(certificates.size()));
  return result;
}

CommandResult run_density(const Flags& flags, bool t_given) {
  const cox::CoxeterSystem system = load_system(flags);
  const cox::BallOptions opts = ball_options_from_env();

  std::function<bool(const cox::Element&)> target;
  std::string description;
  if (t_given) {
    const cox::GenSubset t = subset_flag(system, flags.t);
    const cox::GenSubset gens = cox::theorem_generator_set(system, t);
    description = "union of singleton descent classes over " +
                  cox::format_subset(system, gens);
    target = [gens](const cox::Element& w) {
      for (int s : gens.indices()) {
        if (cox::in_descent_class(w, cox::GenSubset::single(s))) return true;
      }
      return false;
    };
  } else {
    const int s = generator_flag(system, flags.target_gen, "--target-gen");
    description = "descent class of " + system.name(s);
    target = [s](const cox::Element& w) {
      return cox::in_descent_class(w, cox::GenSubset::single(s));
    };
  }

  const cox::DensityProfile profile = cox::density_profile(
      system, target, description, flags.radius, flags.margin, opts);

  CommandResult result;
  result.system = system_json(system.names(), system.matrix());
  result.digest = digest_hex(system);
  result.verdict["target"] = profile.target_description;
  result.verdict["radius"] = profile.radius;
  result.verdict["margin"] = profile.margin;
  result.verdict["ball_size"] = profile.ball_size;
  result.verdict["target_size"] = profile.target_size;
  ordered_json rows = ordered_json::array();
  for (const cox::DensityRow& row : profile.rows) {
    ordered_json r;
    r["r"] = row.r;
    if (row.max_distance) {
      r["max_distance"] = *row.max_distance;
      r["witness"] = nf_string(system, row.witness);
    } else {
      r["max_distance"] = nullptr;
      r["witness"] = nullptr;
    }
    r["boundary_reliable"] = row.boundary_reliable;
    rows.push_back(std::move(r));
    std::string line = "  r=" + std::to_string(row.r) + "  max=";
    line += row.max_distance ? std::to_string(*row.max_distance) : "none";
    line += row.boundary_reliable ? "  reliable" : "  unreliable";
    if (row.max_distance) {
      line += "  witness " + nf_string(system, row.witness);
    }
    result.lines.push_back(std::move(line));
  }
  result.verdict["rows"] = std::move(rows);
  result.lines.insert(result.lines.begin(),
                      {"target     " + profile.target_description,
                       "radius     " + std::to_string(profile.radius) +
                           "  margin " + std::to_string(profile.margin),
                       "ball       " + std::to_string(profile.ball_size) +
                           "  target " + std::to_string(profile.target_size)});
  return result;
}

CommandResult run_invariance(const Flags& flags) {
  const cox::CoxeterSystem system = load_system(flags);
  const cox::GenSubset t = subset_flag(system, flags.t);
  const bool invariant = cox::check_w_invariance(system, t);

  CommandResult result;
  result.system = system_json(system.names(), system.matrix());
  result.digest = digest_hex(system);
  result.verdict["subset"] = labels_json(system, t);
  result.verdict["t_tilde"] =
      labels_json(system, cox::essential_subset(system, t));
  result.verdict["invariant"] = invariant;
  result.lines.push_back("subset     " + cox::format_subset(system, t));
  result.lines.push_back(std::string("invariant  ") +
                         (invariant ? "yes" : "no"));
  return result;
}

CommandResult run_verify(const Flags& flags) {
  const cox::CoxeterSystem system = load_system(flags);
  const cox::BallOptions opts = ball_options_from_env();
  const cox::GenSubset t = subset_flag(system, flags.t);

  CommandResult result;
  result.system = system_json(system.names(), system.matrix());
  result.digest = digest_hex(system);
  result.verdict["lemma"] = flags.lemma;

  if (flags.lemma == "2.7") {
    if (flags.chain.empty()) {
      throw cox::PreconditionError("--lemma 2.7 needs --chain");
    }
    const std::vector<int> chain = cox::word_from_labels(system, flags.chain);
    const auto violators =
        cox::verify_chain_transport(system, t, chain, flags.radius, opts);
    result.verdict["subset"] = labels_json(system, t);
    result.verdict["chain"] = nf_string(system, chain);
    result.verdict["radius"] = flags.radius;
    ordered_json list = ordered_json::array();
    for (const auto& nf : violators) {
      list.push_back(nf_string(system, nf));
      result.lines.push_back("violator   " + nf_string(system, nf));
    }
    result.verdict["counterexamples"] = std::move(list);
    result.verdict["count"] = violators.size();
    result.counterexamples = !violators.empty();
    result.lines.push_back("counterexamples  " +
                           std::to_string(violators.size()));
  } else if (flags.lemma == "descent-extension") {
    const auto violators =
        cox::verify_descent_extension(system, flags.radius, opts);
    result.verdict["radius"] = flags.radius;
    ordered_json list = ordered_json::array();
    for (const auto& v : violators) {
      list.push_back(ordered_json{{"nf", nf_string(system, v.nf)},
                                  {"s0", system.name(v.s0)}});
      result.lines.push_back("violator   " + nf_string(system, v.nf) +
                             "  s0=" + system.name(v.s0));
    }
    result.verdict["counterexamples"] = std::move(list);
    result.verdict["count"] = violators.size();
    result.counterexamples = !violators.empty();
    result.lines.push_back("counterexamples  " +
                           std::to_string(violators.size()));
  } else if (flags.lemma == "commuting-set") {
    const cox::CommutingSetReport report = cox::estimate_commuting_set(
        system, t, flags.radius, flags.window, opts);
    result.verdict["subset"] = labels_json(system, t);
    result.verdict["t_tilde"] = labels_json(system, report.t_tilde);
    result.verdict["radius"] = report.radius;
    result.verdict["window"] = report.stab_window;
    ordered_json per = ordered_json::array();
    for (const auto& row : report.per_generator) {
      per.push_back(ordered_json{{"s", system.name(row.s)},
                                 {"counts", row.counts},
                                 {"stabilized", row.stabilized}});
      std::string line = "  s=" + system.name(row.s) + "  counts";
      for (auto c : row.counts) line += " " + std::to_string(c);
      line += row.stabilized ? "  (stable)" : "  (growing)";
      result.lines.push_back(std::move(line));
    }
    result.verdict["per_generator"] = std::move(per);
    result.verdict["u_est"] = labels_json(system, report.u_est);
    ordered_json disc = ordered_json::array();
    for (const auto& d : report.discrepancies) {
      disc.push_back(ordered_json{{"t", system.name(d.t)},
                                  {"u", system.name(d.u)}});
      result.lines.push_back("discrepancy  t=" + system.name(d.t) +
                             "  u=" + system.name(d.u));
    }
    result.verdict["discrepancies"] = std::move(disc);
    result.counterexamples = !report.discrepancies.empty();
    result.lines.push_back("u_est      " +
                           cox::format_subset(system, report.u_est));
  } else if (flags.lemma == "infinite-intersection") {
    if (flags.probe.empty()) {
      throw cox::PreconditionError("--lemma infinite-intersection needs --s");
    }
    const int s = generator_flag(system, flags.probe, "--s");
    const cox::IntersectionGrowth growth =
        cox::intersection_growth(system, t, s, flags.radius, opts);
    result.verdict["subset"] = labels_json(system, t);
    result.verdict["s"] = system.name(s);
    result.verdict["radius"] = growth.radius;
    result.verdict["cumulative"] = growth.cumulative;
    result.verdict["checkpoints"] = growth.checkpoints;
    ordered_json at = ordered_json::array();
    for (int r : growth.checkpoints) {
      at.push_back(growth.cumulative[static_cast<std::size_t>(r)]);
    }
    result.verdict["checkpoint_counts"] = std::move(at);
    result.verdict["positive"] = growth.positive;
    result.verdict["strictly_increasing"] = growth.strictly_increasing;
    result.counterexamples = !(growth.positive && growth.strictly_increasing);
    std::string line = "cumulative";
    for (auto c : growth.cumulative) line += " " + std::to_string(c);
    result.lines.push_back(std::move(line));
    result.lines.push_back(std::string("growing    ") +
                           (growth.strictly_increasing ? "yes" : "no"));
  } else if (flags.lemma == "index") {
    const cox::IndexCountReport report =
        cox::verify_index_count(system, t, opts);
    result.verdict["subset"] = labels_json(system, t);
    result.verdict["group_order"] = order_json(report.group_order);
    result.verdict["subgroup_order"] = order_json(report.subgroup_order);
    result.verdict["min_rep_count"] = report.min_rep_count;
    result.verdict["formula_index"] = order_json(report.formula_index);
    result.verdict["consistent"] = report.consistent;
    result.counterexamples = !report.consistent;
    result.lines.push_back("group      " + report.group_order.str());
    result.lines.push_back("subgroup   " + report.subgroup_order.str());
    result.lines.push_back("min reps   " +
                           std::to_string(report.min_rep_count));
    result.lines.push_back("formula    " + report.formula_index.str());
    result.lines.push_back(std::string("consistent ") +
                           (report.consistent ? "yes" : "no"));
  } else {
    throw cox::PreconditionError("unknown lemma '" + flags.lemma + "'");
  }
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter system toolkit"};
  app.require_subcommand(1);

  Flags flags;
  auto common = [&](CLI::App* sub) {
    sub->add_option("file", flags.file, "diagram file")->required();
    sub->add_flag("--json", flags.json, "emit JSON instead of a table");
    sub->add_option("--epsilon", flags.epsilon,
                    "sign-certification tolerance");
    return sub;
  };

  auto* c_validate = common(app.add_subcommand(
      "validate", "check the presentation conditions; violations are data"));
  auto* c_components = common(app.add_subcommand(
      "components", "irreducible components and diagram edges"));
  auto* c_classify = common(
      app.add_subcommand("classify", "finite-type classification of W_T"));
  auto* cls_t =
      c_classify->add_option("--t", flags.t, "generator subset (default: all)");
  auto* c_spherical = common(
      app.add_subcommand("spherical", "sphericity of W_T, or all maximal"));
  auto* sph_t = c_spherical->add_option("--t", flags.t, "generator subset");
  auto* sph_max = c_spherical->add_flag("--maximal", flags.maximal,
                                        "list maximal spherical subsets");
  sph_t->excludes(sph_max);
  auto* c_essential = common(app.add_subcommand(
      "essential", "essential subset of S, or of (W_T, T) under --t"));
  auto* ess_t = c_essential->add_option("--t", flags.t, "generator subset");
  auto* c_ball = common(app.add_subcommand(
      "ball", "Cayley ball enumeration (whole group without --radius)"));
  c_ball->add_option("--radius", flags.radius, "ball radius")
      ->check(CLI::NonNegativeNumber);
  c_ball->add_flag("--count-only", flags.count_only, "sizes only");
  c_ball->add_flag("--dump", flags.dump, "list elements and adjacency");
  auto* c_distance = common(
      app.add_subcommand("distance", "word metric between two elements"));
  c_distance->add_option("--word", flags.word, "comma-separated labels")
      ->required();
  c_distance->add_option("--other", flags.other, "comma-separated labels")
      ->required();
  auto* c_nf =
      common(app.add_subcommand("nf", "normal form of a word"));
  c_nf->add_option("--word", flags.word, "comma-separated labels")->required();
  auto* c_descents = common(app.add_subcommand(
      "descents", "descent sets and support of a word"));
  c_descents->add_option("--word", flags.word, "comma-separated labels")
      ->required();
  auto* c_index = common(app.add_subcommand(
      "index", "index of the parabolic subgroup, optional coset split"));
  c_index->add_option("--t", flags.t, "generator subset")->required();
  c_index->add_option("--word", flags.word,
                      "decompose this word over the subset");
  auto* c_theorem = common(app.add_subcommand(
      "theorem-set", "generators whose descent classes target density"));
  c_theorem->add_option("--t", flags.t, "generator subset")->required();
  auto* c_corollary = common(app.add_subcommand(
      "check-corollary", "density witnesses through maximal sphericals"));
  c_corollary->add_option("--t", flags.t, "generator subset")->required();
  auto* c_certificate = common(app.add_subcommand(
      "certificate", "quasi-density certificates for singleton classes"));
  auto* c_density = common(app.add_subcommand(
      "density", "empirical distance-to-target profile on a ball"));
  auto* den_t = c_density->add_option("--t", flags.t, "target via theorem-set");
  auto* den_gen = c_density->add_option("--target-gen", flags.target_gen,
                                        "target one descent class");
  den_t->excludes(den_gen);
  c_density->add_option("--radius", flags.radius, "outer radius (default 12)")
      ->check(CLI::PositiveNumber);
  c_density->add_option("--margin", flags.margin,
                        "reliability margin (default 4)")
      ->check(CLI::NonNegativeNumber);
  auto* c_invariance = common(app.add_subcommand(
      "invariance", "direct-product splitting test for the essential part"));
  c_invariance->add_option("--t", flags.t, "generator subset")->required();
  auto* c_verify = common(app.add_subcommand(
      "verify", "exhaustive ball-level verifiers"));
  c_verify
      ->add_option("--lemma", flags.lemma,
                   "one of: 2.7, descent-extension, commuting-set, "
                   "infinite-intersection, index")
      ->required()
      ->check(CLI::IsMember({"2.7", "descent-extension", "commuting-set",
                             "infinite-intersection", "index"}));
  c_verify->add_option("--t", flags.t, "generator subset");
  c_verify->add_option("--chain", flags.chain, "comma-separated chain");
  c_verify->add_option("--s", flags.probe, "probe generator");
  c_verify->add_option("--radius", flags.radius, "ball radius (default 6)")
      ->check(CLI::NonNegativeNumber);
  c_verify->add_option("--window", flags.window,
                       "stabilization window (default 3)")
      ->check(CLI::PositiveNumber);

  try {
    flags.radius = -1;  // ball: absent means whole group
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  // Per-command radius defaults when the flag was not supplied.
  if (c_density->parsed() && c_density->count("--radius") == 0) {
    flags.radius = 12;
  }
  if (c_verify->parsed() && c_verify->count("--radius") == 0) {
    flags.radius = 6;
  }

  CommandResult result;
  std::string command;
  const auto started = std::chrono::steady_clock::now();
  try {
    if (c_validate->parsed()) {
      command = "validate";
      result = run_validate(flags);
    } else if (c_components->parsed()) {
      command = "components";
      result = run_components(flags);
    } else if (c_classify->parsed()) {
      command = "classify";
      result = run_classify(flags, cls_t->count() > 0);
    } else if (c_spherical->parsed()) {
      command = "spherical";
      if (!flags.maximal && sph_t->count() == 0) {
        std::cerr << "error: spherical needs --t or --maximal\n";
        return 1;
      }
      result = run_spherical(flags);
    } else if (c_essential->parsed()) {
      command = "essential";
      result = run_essential(flags, ess_t->count() > 0);
    } else if (c_ball->parsed()) {
      command = "ball";
      result = run_ball(flags);
    } else if (c_distance->parsed()) {
      command = "distance";
      result = run_distance(flags);
    } else if (c_nf->parsed()) {
      command = "nf";
      result = run_nf(flags);
    } else if (c_descents->parsed()) {
      command = "descents";
      result = run_descents(flags);
    } else if (c_index->parsed()) {
      command = "index";
      result = run_index(flags);
    } else if (c_theorem->parsed()) {
      command = "theorem-set";
      result = run_theorem_set(flags);
    } else if (c_corollary->parsed()) {
      command = "check-corollary";
      result = run_check_corollary(flags);
    } else if (c_certificate->parsed()) {
      command = "certificate";
      result = run_certificate(flags);
    } else if (c_density->parsed()) {
      command = "density";
      if (den_t->count() == 0 && den_gen->count() == 0) {
        std::cerr << "error: density needs --t or --target-gen\n";
        return 1;
      }
      result = run_density(flags, den_t->count() > 0);
    } else if (c_invariance->parsed()) {
      command = "invariance";
      result = run_invariance(flags);
    } else if (c_verify->parsed()) {
      command = "verify";
      result = run_verify(flags);
    }
  } catch (const cox::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const cox::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const cox::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const cox::NumericalAmbiguityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cox::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();

  if (flags.json) {
    ordered_json root;
    root["command"] = command;
    if (!result.digest.empty()) root["digest"] = result.digest;
    root["system"] = std::move(result.system);
    root["verdict"] = std::move(result.verdict);
    std::cout << root.dump(2) << "\n";
  } else {
    for (const std::string& line : result.lines) std::cout << line << "\n";
    if (!result.digest.empty()) std::cout << "digest     " << result.digest << "\n";
    std::cout << "elapsed    " << elapsed << " ms\n";
  }
  return result.counterexamples ? 3 : 0;
}
