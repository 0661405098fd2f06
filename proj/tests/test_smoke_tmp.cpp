#include "doctest.h"
#include "dicke/cli_runner.hpp"
#include "dicke/verification.hpp"

TEST_CASE("links") {
  auto gen = dicke::build_coherent_generator(dicke::SystemSize(2), dicke::BathParams::from_tau(1.0));
  CHECK(gen.dim() == 3);
}
