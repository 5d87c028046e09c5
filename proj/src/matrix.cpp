#include "cox/matrix.hpp"

#include "cox/errors.hpp"

namespace cox {

CoxeterMatrix::CoxeterMatrix(int rank) : rank_(rank) {
  if (rank < 0) {
    throw PreconditionError("matrix rank must be >= 0");
  }
  entries_.assign(static_cast<std::size_t>(rank) * rank, Bond::finite(2));
  for (int i = 0; i < rank; ++i) {
    entries_[static_cast<std::size_t>(i) * rank + i] = Bond::finite(1);
  }
}

void CoxeterMatrix::check_index(int i, int j) const {
  if (i < 0 || j < 0 || i >= rank_ || j >= rank_) {
    throw PreconditionError("matrix index out of range");
  }
}

Bond CoxeterMatrix::at(int i, int j) const {
  check_index(i, j);
  return entries_[static_cast<std::size_t>(i) * rank_ + j];
}

void CoxeterMatrix::set_entry(int i, int j, Bond b) {
  check_index(i, j);
  entries_[static_cast<std::size_t>(i) * rank_ + j] = b;
}

void CoxeterMatrix::set_bond(int i, int j, Bond b) {
  set_entry(i, j, b);
  set_entry(j, i, b);
}

std::string Violation::message() const {
  switch (kind) {
    case Kind::Symmetry:
      return "entries (" + std::to_string(i) + "," + std::to_string(j) +
             ") and (" + std::to_string(j) + "," + std::to_string(i) +
             ") differ";
    case Kind::Diagonal:
      return "diagonal entry at " + std::to_string(i) + " is not 1";
    case Kind::OffDiagonal:
      return "entry (" + std::to_string(i) + "," + std::to_string(j) +
             ") is below 2";
  }
  return "unknown violation";
}

std::vector<Violation> validate(const CoxeterMatrix& m) {
  std::vector<Violation> out;
  const int n = m.rank();
  for (int i = 0; i < n; ++i) {
    if (m.at(i, i) != Bond::finite(1)) {
      out.push_back({Violation::Kind::Diagonal, i, i});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (m.at(i, j) != m.at(j, i)) {
        out.push_back({Violation::Kind::Symmetry, i, j});
      }
      // Condition (3) applies to both cells; report each bad cell once.
      if (!m.at(i, j).at_least(2)) {
        out.push_back({Violation::Kind::OffDiagonal, i, j});
      }
      if (m.at(j, i) != m.at(i, j) && !m.at(j, i).at_least(2)) {
        out.push_back({Violation::Kind::OffDiagonal, j, i});
      }
    }
  }
  return out;
}

}  // namespace cox
