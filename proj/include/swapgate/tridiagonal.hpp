#pragma once

// Symmetric tridiagonal eigenproblem keeping only the first component of
// each eigenvector, which is all the site-A survival amplitude needs. Implicit
// QL with Wilkinson shifts; O(n^2) time and O(n) memory.

#include <vector>

namespace swapgate {

struct FirstRowSpectrum {
  std::vector<double> energies;  ///< ascending
  std::vector<double> weights;   ///< |<0|k>|^2, summing to 1
};

/// `offdiag[i]` couples sites i and i+1, so offdiag.size() == diag.size() - 1.
/// Throws EigensolverFailure when an eigenvalue needs more than 30 sweeps.
FirstRowSpectrum tridiagonal_first_row(std::vector<double> diag, const std::vector<double>& offdiag);

}  // namespace swapgate
