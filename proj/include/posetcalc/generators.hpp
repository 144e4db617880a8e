#pragma once

#include "posetcalc/module.hpp"

namespace posetcalc {

// Product of two chains {0<...<m} x {0<...<n}; objects labelled "i_j".
PosetPtr grid_poset(int m, int n);

// Seed-deterministic random grid module with every horizontal map surjective:
// horizontal maps are coordinate projections conjugated by random base
// changes, vertical maps are blocks of one master matrix per row pair whose
// forced zero pattern makes all squares commute.
PosetModule gen_grid(int m, int n, unsigned long seed, int max_dim, const Field& f);

enum class LadderType { Zigzag, DoubleZigzag };

// Two A_n rows of the same type joined by upward covers. The type sequence is
// FBFB... (zigzag) or FFBB... (double zigzag); orientation 'B' flips every
// horizontal arrow.
PosetPtr gen_ladder(int n, LadderType type, char orientation = 'F');

}  // namespace posetcalc
