#include "gha/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gha {

namespace {

int default_jobs() {
  if (const char* env = std::getenv("GHA_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::atomic<int>& job_count() {
  static std::atomic<int> count{default_jobs()};
  return count;
}

}  // namespace

int jobs() { return job_count().load(); }

void set_jobs(int count) { job_count().store(count > 0 ? count : 1); }

namespace serial {

std::vector<std::vector<Rational>> fill_columns(const HomKernel& kernel, std::span<const KLabeledGraph> graphs) {
  std::vector<std::vector<Rational>> out;
  out.reserve(graphs.size());
  for (const auto& f : graphs) out.push_back(kernel.column(f));
  return out;
}

std::vector<Rational> hom_values(const HomKernel& kernel, std::span<const KLabeledGraph> graphs) {
  std::vector<Rational> out;
  out.reserve(graphs.size());
  for (const auto& f : graphs) out.push_back(kernel.partial(f.unlabeled_copy(), MapAssignment{}));
  return out;
}

std::vector<Rational> gluing_values(const HomKernel& kernel, std::span<const KLabeledGraph> graphs) {
  const std::size_t n = graphs.size();
  std::vector<Rational> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      out[i * n + j] = kernel.partial(glue(graphs[i], graphs[j]).unlabeled_copy(), MapAssignment{});
      out[j * n + i] = out[i * n + j];
    }
  }
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<std::vector<Rational>> fill_columns(const HomKernel& kernel, std::span<const KLabeledGraph> graphs) {
  const auto n = static_cast<std::ptrdiff_t>(graphs.size());
  std::vector<std::vector<Rational>> out(graphs.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(jobs())
  for (std::ptrdiff_t j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = kernel.column(graphs[j]);
  return out;
}

std::vector<Rational> hom_values(const HomKernel& kernel, std::span<const KLabeledGraph> graphs) {
  const auto n = static_cast<std::ptrdiff_t>(graphs.size());
  std::vector<Rational> out(graphs.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(jobs())
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    out[static_cast<std::size_t>(j)] = kernel.partial(graphs[j].unlabeled_copy(), MapAssignment{});
  }
  return out;
}

std::vector<Rational> gluing_values(const HomKernel& kernel, std::span<const KLabeledGraph> graphs) {
  const std::size_t n = graphs.size();
  std::vector<Rational> out(n * n);
  const auto total = static_cast<std::ptrdiff_t>(n * n);
#pragma omp parallel for schedule(dynamic, 8) num_threads(jobs())
  for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
    const std::size_t i = static_cast<std::size_t>(idx) / n;
    const std::size_t j = static_cast<std::size_t>(idx) % n;
    if (j < i) continue;
    Rational v = kernel.partial(glue(graphs[i], graphs[j]).unlabeled_copy(), MapAssignment{});
    out[j * n + i] = v;
    out[i * n + j] = std::move(v);
  }
  return out;
}

}  // namespace parallel

}  // namespace gha
