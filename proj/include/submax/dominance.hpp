#pragma once

#include "submax/matrix.hpp"

namespace submax {

// Row dominant: every selected row's sum over the selected columns is at
// least every unselected row's. Maxima over empty competitor sets are
// -infinity, so a full-height selection is vacuously row dominant.
bool is_row_dominant(const Matrix& M, const Selection& S);
bool is_column_dominant(const Matrix& M, const Selection& S);
bool is_local_max(const Matrix& M, const Selection& S);

}  // namespace submax
