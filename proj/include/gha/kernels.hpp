#pragma once

#include <span>
#include <vector>

#include "gha/hom.hpp"
#include "gha/labeled_graph.hpp"
#include "gha/rational.hpp"

namespace gha {

/// Worker count used by the parallel kernels. Defaults to GHA_JOBS when set,
/// otherwise to the OpenMP runtime default.
int jobs();
void set_jobs(int count);

// The column fills below are the hot loops of every matrix build. The serial
// versions are the reference the OpenMP versions are tested against; both
// return identical results for any job count.

namespace serial {

/// Columns of N(k, G): result[j][phi] = hom_phi(graphs[j], G).
std::vector<std::vector<Rational>> fill_columns(const HomKernel& kernel, std::span<const KLabeledGraph> graphs);

/// hom(F, G) for each F (labels ignored).
std::vector<Rational> hom_values(const HomKernel& kernel, std::span<const KLabeledGraph> graphs);

/// Symmetric matrix entries hom(glue(F_i, F_j), G), row-major.
std::vector<Rational> gluing_values(const HomKernel& kernel, std::span<const KLabeledGraph> graphs);

}  // namespace serial

namespace parallel {

std::vector<std::vector<Rational>> fill_columns(const HomKernel& kernel, std::span<const KLabeledGraph> graphs);
std::vector<Rational> hom_values(const HomKernel& kernel, std::span<const KLabeledGraph> graphs);
std::vector<Rational> gluing_values(const HomKernel& kernel, std::span<const KLabeledGraph> graphs);

}  // namespace parallel

}  // namespace gha
