#include "cox/element.hpp"

#include <sstream>
#include <utility>

#include "cox/errors.hpp"

namespace cox {
namespace {

// Generous bound on extraction steps: far above any element length a
// ball within the resource cap can reach. Hitting it means the sign
// tests stopped being trustworthy.
constexpr int kMaxExtractionSteps = 1 << 16;

void require_generator(const CoxeterSystem& system, int s) {
  if (s < 0 || s >= system.rank()) {
    throw PreconditionError("generator index " + std::to_string(s) +
                            " out of range for rank " +
                            std::to_string(system.rank()));
  }
}

void require_same_presentation(const CoxeterSystem& a,
                               const CoxeterSystem& b) {
  if (!a.same_presentation(b)) {
    throw PreconditionError("elements belong to different presentations");
  }
}

}  // namespace

Element::Element(const CoxeterSystem* system, Eigen::MatrixXd fwd,
                 Eigen::MatrixXd inv, std::vector<int> nf)
    : system_(system),
      fwd_(std::move(fwd)),
      inv_(std::move(inv)),
      nf_(std::move(nf)) {}

Element identity(const CoxeterSystem& system) {
  const int n = system.rank();
  return Element(&system, Eigen::MatrixXd::Identity(n, n),
                 Eigen::MatrixXd::Identity(n, n), {});
}

std::vector<int> shortlex_from_matrices(const CoxeterSystem& system,
                                        Eigen::MatrixXd fwd,
                                        Eigen::MatrixXd inv) {
  const int n = system.rank();
  const double eps = system.sign_tolerance();
  std::vector<int> nf;
  for (int step = 0; step < kMaxExtractionSteps; ++step) {
    int descent = -1;
    for (int s = 0; s < n; ++s) {
      if (certify_sign(inv.col(s), eps, "left descent scan") ==
          VecSign::Negative) {
        descent = s;
        break;
      }
    }
    if (descent < 0) {
      return nf;  // the identity is the only element with no left descent
    }
    nf.push_back(descent);
    apply_reflection_left(system, descent, fwd);
    apply_reflection_right(system, descent, inv);
  }
  throw NumericalAmbiguityError(
      "normal form extraction did not terminate; sign tolerance is no "
      "longer separating root coordinates");
}

Element mul_gen(const Element& w, int s, Side side) {
  const CoxeterSystem& system = w.system();
  require_generator(system, s);
  Eigen::MatrixXd fwd = w.fwd();
  Eigen::MatrixXd inv = w.inv();
  if (side == Side::Right) {
    apply_reflection_right(system, s, fwd);
    apply_reflection_left(system, s, inv);
  } else {
    apply_reflection_left(system, s, fwd);
    apply_reflection_right(system, s, inv);
  }
  std::vector<int> nf = shortlex_from_matrices(system, fwd, inv);
  return Element(&system, std::move(fwd), std::move(inv), std::move(nf));
}

Element mul(const Element& a, const Element& b) {
  require_same_presentation(a.system(), b.system());
  Eigen::MatrixXd fwd = a.fwd() * b.fwd();
  Eigen::MatrixXd inv = b.inv() * a.inv();
  std::vector<int> nf = shortlex_from_matrices(a.system(), fwd, inv);
  return Element(&a.system(), std::move(fwd), std::move(inv), std::move(nf));
}

Element inverse(const Element& w) {
  Eigen::MatrixXd fwd = w.inv();
  Eigen::MatrixXd inv = w.fwd();
  std::vector<int> nf = shortlex_from_matrices(w.system(), fwd, inv);
  return Element(&w.system(), std::move(fwd), std::move(inv), std::move(nf));
}

Element element_from_word(const CoxeterSystem& system,
                          std::span<const int> word) {
  Element w = identity(system);
  for (int s : word) {
    w = mul_gen(w, s, Side::Right);
  }
  return w;
}

GenSubset descent_set(const Element& w, Side side) {
  const CoxeterSystem& system = w.system();
  const double eps = system.sign_tolerance();
  const Eigen::MatrixXd& m = side == Side::Right ? w.fwd() : w.inv();
  const char* context =
      side == Side::Right ? "right descent test" : "left descent test";
  GenSubset result = GenSubset::none();
  for (int s = 0; s < system.rank(); ++s) {
    if (certify_sign(m.col(s), eps, context) == VecSign::Negative) {
      result = result.with(s);
    }
  }
  return result;
}

bool equals(const Element& a, const Element& b) {
  require_same_presentation(a.system(), b.system());
  return a.word() == b.word();
}

int word_distance(const Element& a, const Element& b) {
  return mul(inverse(a), b).length();
}

std::string format_word(const CoxeterSystem& system,
                        std::span<const int> word) {
  if (word.empty()) return "e";
  std::ostringstream out;
  for (size_t i = 0; i < word.size(); ++i) {
    require_generator(system, word[i]);
    if (i) out << ' ';
    out << system.name(word[i]);
  }
  return out.str();
}

std::vector<int> word_from_labels(const CoxeterSystem& system,
                                  std::string_view comma_list) {
  std::vector<int> word;
  size_t pos = 0;
  while (pos <= comma_list.size()) {
    size_t comma = comma_list.find(',', pos);
    if (comma == std::string_view::npos) comma = comma_list.size();
    std::string_view token = comma_list.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty() && token != "e") {
      std::optional<int> idx = system.index_of(token);
      if (!idx) {
        throw PreconditionError("unknown generator label '" +
                                std::string(token) + "'");
      }
      word.push_back(*idx);
    } else if (token == "e" && !(word.empty() && comma == comma_list.size() &&
                                 pos == 0)) {
      throw PreconditionError("'e' denotes the identity and cannot appear "
                              "inside a word");
    }
    pos = comma + 1;
  }
  return word;
}

}  // namespace cox
