#pragma once

#include <iosfwd>
#include <string>

#include "epsteinlab/grid.hpp"

namespace epsteinlab {

// Plain-text field files: one line "nx,ny,x0,y0,dx,dy" followed by one line
// per node in row-major order (x fastest). Scalars have one column, tensors
// three (T11,T12,T22). Excluded nodes are written as nan.

void write_field_csv(std::ostream& os, const ScalarField& f);
void write_field_csv(std::ostream& os, const SymTensor2Field& f);
void write_field_csv(const std::string& path, const ScalarField& f);
void write_field_csv(const std::string& path, const SymTensor2Field& f);

ScalarField read_scalar_csv(std::istream& is, bool periodic = false);
SymTensor2Field read_tensor_csv(std::istream& is, bool periodic = false);
ScalarField read_scalar_csv(const std::string& path, bool periodic = false);
SymTensor2Field read_tensor_csv(const std::string& path, bool periodic = false);

}  // namespace epsteinlab
