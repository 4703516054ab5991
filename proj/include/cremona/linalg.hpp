#pragma once

#include <optional>
#include <vector>

#include "cremona/scalar.hpp"

namespace cremona {

// dense rational matrices, row major; only small fixed sizes occur here
using QMatrix = std::vector<std::vector<Scalar>>;

QMatrix qmat_identity(int n);
QMatrix qmat_mul(const QMatrix &a, const QMatrix &b);
QMatrix qmat_pow(const QMatrix &a, unsigned e);
bool qmat_is_zero(const QMatrix &a);
bool qmat_is_square(const QMatrix &a);
Scalar qmat_det(QMatrix a);
std::optional<QMatrix> qmat_inverse(QMatrix a);

} // namespace cremona
