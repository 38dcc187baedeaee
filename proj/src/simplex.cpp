#include "petty/simplex.hpp"

namespace petty {

template LpSolution<Rat> solve_standard_lp<Rat>(int, int, std::vector<Rat>,
                                                std::vector<Rat>, std::vector<Rat>);
template LpSolution<double> solve_standard_lp<double>(int, int, std::vector<double>,
                                                      std::vector<double>,
                                                      std::vector<double>);
template LpSolution<Rat> solve_general_lp<Rat>(int, const std::vector<LpRow<Rat>>&,
                                               const std::vector<LpBounds<Rat>>&,
                                               std::vector<Rat>);
template LpSolution<double> solve_general_lp<double>(int, const std::vector<LpRow<double>>&,
                                                     const std::vector<LpBounds<double>>&,
                                                     std::vector<double>);

}  // namespace petty
