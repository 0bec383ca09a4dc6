// Runs both models on the bundled figure-5 villages and prints the outliers.
#include <iostream>

#include "wsod/fixtures.hpp"
#include "wsod/wsod.hpp"

int main() {
  const auto villages = wsod::fixtures::figure5();
  wsod::WeightParams params;
  params.radius = wsod::fixtures::kFigure5Radius;

  for (auto mode : {wsod::Mode::classical, wsod::Mode::weighted}) {
    const auto result =
        wsod::detect_outliers(villages, wsod::fixtures::kFigure5Attribute, params, mode, wsod::Regime::buffer);
    std::cout << wsod::to_string(mode) << " outliers:";
    for (const auto &id : result.outliers())
      std::cout << ' ' << id;
    std::cout << '\n';
  }
}
