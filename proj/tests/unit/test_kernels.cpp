#include "gha/kernels.hpp"

#include <gtest/gtest.h>

#include "gha/catalog.hpp"
#include "gha/corpus.hpp"

namespace gha {
namespace {

class KernelJobs : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override {
    saved_ = jobs();
    set_jobs(GetParam());
  }
  void TearDown() override { set_jobs(saved_); }

 private:
  int saved_ = 1;
};

TEST_P(KernelJobs, ParallelFillMatchesSerial) {
  const auto catalog = enumerate_k_labeled(2, {4, 4, 2});
  for (const auto& g : {corpus::cycle(4), corpus::half_edge_p3(), corpus::weighted_p2()}) {
    const HomKernel kernel(g);
    EXPECT_EQ(parallel::fill_columns(kernel, catalog.graphs), serial::fill_columns(kernel, catalog.graphs));
    EXPECT_EQ(parallel::hom_values(kernel, catalog.graphs), serial::hom_values(kernel, catalog.graphs));
  }
}

TEST_P(KernelJobs, ParallelGluingMatchesSerial) {
  const auto catalog = enumerate_k_labeled(1, {3, 3, 2});
  const HomKernel kernel(corpus::looped_p3());
  EXPECT_EQ(parallel::gluing_values(kernel, catalog.graphs), serial::gluing_values(kernel, catalog.graphs));
}

INSTANTIATE_TEST_SUITE_P(Jobs, KernelJobs, ::testing::Values(1, 2, 4));

TEST(Kernels, JobCountIsPositive) {
  const int saved = jobs();
  set_jobs(0);
  EXPECT_EQ(jobs(), 1);
  set_jobs(saved);
  EXPECT_GE(jobs(), 1);
}

}  // namespace
}  // namespace gha
