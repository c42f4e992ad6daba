#ifndef CHEBJAC_TOOLS_COEFFICIENT_FILE_HPP
#define CHEBJAC_TOOLS_COEFFICIENT_FILE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace chebjac::cli {

enum class FileBasis { cheb, jac };

/// Plain-text coefficients:
///
///   jac,0.125,0.375,2
///   1
///   0.5
///   -2
///
/// The first line holds basis, alpha, beta and the degree N; the next N+1
/// lines hold one value each. Lines starting with '#' and blank lines are
/// skipped, and a literal "basis,alpha,beta,N" column line may precede the
/// header. For cheb files alpha and beta record the Jacobi pair involved.
struct CoefficientFile {
  FileBasis basis = FileBasis::jac;
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<double> values;

  int degree() const noexcept { return static_cast<int>(values.size()) - 1; }
};

/// Throws std::invalid_argument naming the offending line.
CoefficientFile read_coefficient_file(std::istream& in);
CoefficientFile read_coefficient_file(const std::string& path);

/// Values are written in shortest round-trip form.
void write_coefficient_file(std::ostream& out, const CoefficientFile& file);

const char* basis_name(FileBasis b) noexcept;

}  // namespace chebjac::cli

#endif  // CHEBJAC_TOOLS_COEFFICIENT_FILE_HPP
