#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace peer {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using IntVector = Eigen::VectorXi;

// Error taxonomy shared by the whole toolkit. The CLI maps these onto exit
// codes: validation 2, convergence 3, I/O 4.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Warnings go to stderr only; they must never influence artifact bytes.
void warn(const std::string& msg);

}  // namespace peer
