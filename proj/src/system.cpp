#include "cox/system.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <unordered_set>

#include "cox/errors.hpp"

namespace cox {

namespace {

double gram_entry(Bond b) {
  if (b.is_inf()) {
    return -1.0;
  }
  // Exact values for the two ubiquitous cases; -cos(pi/2) would otherwise
  // leave a ~1e-17 residue that muddies product-system coordinates.
  switch (b.value()) {
    case 1:
      return 1.0;
    case 2:
      return 0.0;
    case 3:
      return -0.5;
    default:
      return -std::cos(std::numbers::pi / b.value());
  }
}

}  // namespace

CoxeterSystem::CoxeterSystem(std::vector<std::string> names,
                             CoxeterMatrix matrix, double sign_tolerance)
    : names_(std::move(names)),
      matrix_(std::move(matrix)),
      sign_tolerance_(sign_tolerance) {
  const int n = matrix_.rank();
  gram_.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      gram_(i, j) = gram_entry(matrix_.at(i, j));
    }
  }
}

CoxeterSystem CoxeterSystem::create(std::vector<std::string> names,
                                    CoxeterMatrix matrix,
                                    double sign_tolerance) {
  if (static_cast<int>(names.size()) != matrix.rank()) {
    throw PreconditionError("label count does not match matrix rank");
  }
  if (matrix.rank() > kMaxRank) {
    throw PreconditionError("rank exceeds the supported maximum of " +
                            std::to_string(kMaxRank));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& name : names) {
    if (name.empty()) {
      throw PreconditionError("generator labels must be nonempty");
    }
    if (!seen.insert(name).second) {
      throw PreconditionError("duplicate generator label '" + name + "'");
    }
  }
  auto violations = validate(matrix);
  if (!violations.empty()) {
    std::string msg = "not a Coxeter matrix:";
    for (const auto& v : violations) {
      msg += " " + v.message() + ";";
    }
    throw ValidationError(msg);
  }
  return CoxeterSystem(std::move(names), std::move(matrix), sign_tolerance);
}

std::optional<int> CoxeterSystem::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == label) {
      return static_cast<int>(i);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------
// Diagram files
// ---------------------------------------------------------------------

Diagram parse_diagram(std::string_view text) {
  std::vector<std::string> names;
  bool saw_generators = false;
  std::vector<std::pair<int, int>> declared;

  // First pass: find the generators line so the matrix can be sized,
  // then fill bonds. Single pass works because the generators line must
  // come first.
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  std::optional<CoxeterMatrix> matrix;

  auto find = [&](const std::string& label, int line) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == label) {
        return static_cast<int>(i);
      }
    }
    throw ParseError(line, "unknown generator '" + label + "'");
  };

  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream line(raw);
    std::string head;
    if (!(line >> head)) {
      continue;  // blank or comment-only
    }
    if (head == "generators") {
      if (saw_generators) {
        throw ParseError(lineno, "duplicate generators line");
      }
      saw_generators = true;
      std::string label;
      while (line >> label) {
        for (const auto& existing : names) {
          if (existing == label) {
            throw ParseError(lineno, "duplicate generator '" + label + "'");
          }
        }
        names.push_back(label);
      }
      if (names.empty()) {
        throw ParseError(lineno, "generators line names no generators");
      }
      if (static_cast<int>(names.size()) > kMaxRank) {
        throw ParseError(lineno, "rank exceeds the supported maximum of " +
                                     std::to_string(kMaxRank));
      }
      matrix.emplace(static_cast<int>(names.size()));
    } else if (head == "m") {
      if (!saw_generators) {
        throw ParseError(lineno, "'m' line before the generators line");
      }
      std::string a, b, value;
      if (!(line >> a >> b >> value)) {
        throw ParseError(lineno, "expected 'm <label> <label> <value>'");
      }
      std::string extra;
      if (line >> extra) {
        throw ParseError(lineno, "trailing tokens after bond value");
      }
      const int i = find(a, lineno);
      const int j = find(b, lineno);
      if (i == j) {
        throw ParseError(lineno, "bond must name two distinct generators");
      }
      for (auto [pi, pj] : declared) {
        if ((pi == i && pj == j) || (pi == j && pj == i)) {
          throw ParseError(lineno, "duplicate bond for pair (" + a + ", " +
                                       b + ")");
        }
      }
      declared.emplace_back(i, j);
      Bond bond;
      if (value == "inf") {
        bond = Bond::inf();
      } else {
        std::size_t used = 0;
        unsigned long parsed = 0;
        try {
          parsed = std::stoul(value, &used);
        } catch (const std::exception&) {
          throw ParseError(lineno, "bond value must be an integer >= 2 or 'inf'");
        }
        if (used != value.size() || parsed < 2 ||
            parsed > 0xffffffffUL) {
          throw ParseError(lineno, "bond value must be an integer >= 2 or 'inf'");
        }
        bond = Bond::finite(static_cast<std::uint32_t>(parsed));
      }
      matrix->set_bond(i, j, bond);
    } else {
      throw ParseError(lineno, "unrecognized directive '" + head + "'");
    }
  }
  if (!saw_generators) {
    throw ParseError(lineno == 0 ? 1 : lineno, "missing generators line");
  }
  return Diagram{std::move(names), std::move(*matrix)};
}

CoxeterSystem parse_system(std::string_view text, double sign_tolerance) {
  Diagram d = parse_diagram(text);
  return CoxeterSystem::create(std::move(d.names), std::move(d.matrix),
                               sign_tolerance);
}

std::string serialize(const CoxeterSystem& system) {
  std::string out = "generators";
  for (const auto& name : system.names()) {
    out += " " + name;
  }
  out += "\n";
  for (int i = 0; i < system.rank(); ++i) {
    for (int j = i + 1; j < system.rank(); ++j) {
      const Bond b = system.bond(i, j);
      if (b == Bond::finite(2)) {
        continue;  // the default
      }
      out += "m " + system.name(i) + " " + system.name(j) + " " + b.str() +
             "\n";
    }
  }
  return out;
}

// ---------------------------------------------------------------------
// Structure
// ---------------------------------------------------------------------

void require_subset(const CoxeterSystem& system, GenSubset t) {
  if (!t.subset_of(GenSubset::full(system.rank()))) {
    throw PreconditionError("subset has bits outside the generator range");
  }
}

CoxeterSystem restrict(const CoxeterSystem& system, GenSubset t) {
  require_subset(system, t);
  const auto idx = t.indices();
  CoxeterMatrix sub(static_cast<int>(idx.size()));
  std::vector<std::string> names;
  names.reserve(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    names.push_back(system.name(idx[a]));
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      sub.set_bond(static_cast<int>(a), static_cast<int>(b),
                   system.bond(idx[a], idx[b]));
    }
  }
  return CoxeterSystem::create(std::move(names), std::move(sub),
                               system.sign_tolerance());
}

std::vector<GenSubset> irreducible_components(const CoxeterSystem& system) {
  const int n = system.rank();
  std::vector<GenSubset> out;
  GenSubset seen;
  for (int start = 0; start < n; ++start) {
    if (seen.contains(start)) {
      continue;
    }
    // Flood fill along edges with bond >= 3 (or infinite).
    GenSubset comp = GenSubset::single(start);
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        if (!comp.contains(w) && w != v && system.bond(v, w).at_least(3)) {
          comp = comp.with(w);
          stack.push_back(w);
        }
      }
    }
    seen = seen | comp;
    out.push_back(comp);
  }
  // Discovery by ascending start index already orders components by
  // least member.
  return out;
}

Bond product_order(const CoxeterSystem& system, int s, int t) {
  if (s < 0 || t < 0 || s >= system.rank() || t >= system.rank()) {
    throw PreconditionError("generator index out of range");
  }
  return system.bond(s, t);  // the diagonal already holds m(s,s) = 1
}

// ---------------------------------------------------------------------
// Presentation helpers
// ---------------------------------------------------------------------

std::string format_subset(const CoxeterSystem& system, GenSubset t) {
  std::string out = "{";
  bool first = true;
  for (int i : t.indices()) {
    if (!first) {
      out += ",";
    }
    out += system.name(i);
    first = false;
  }
  out += "}";
  return out;
}

GenSubset subset_from_labels(const CoxeterSystem& system,
                             std::string_view comma_list) {
  GenSubset out;
  std::size_t pos = 0;
  while (pos <= comma_list.size()) {
    std::size_t next = comma_list.find(',', pos);
    if (next == std::string_view::npos) {
      next = comma_list.size();
    }
    std::string_view label = comma_list.substr(pos, next - pos);
    if (!label.empty()) {
      auto idx = system.index_of(label);
      if (!idx) {
        throw PreconditionError("unknown generator '" + std::string(label) +
                                "'");
      }
      out = out.with(*idx);
    }
    pos = next + 1;
  }
  return out;
}

std::uint64_t digest(const CoxeterSystem& system) {
  // FNV-1a over the canonical serialization.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize(system)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace cox
