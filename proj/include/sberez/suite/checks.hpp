// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "sberez/suite/common.hpp"

namespace sberez {

// R-matrix level
CheckReport check_qybe(const GradedDim& dim);
CheckReport check_unitarity_qflip(const GradedDim& dim);
CheckReport check_crossing(const GradedDim& dim, int K);
CheckReport check_hecke(const GradedDim& dim);
CheckReport check_symmetrizers(const GradedDim& dim, int mcap);
CheckReport check_fusion(const RepDesc& rep, const Rational& q, int m, Mode mode, Rng& rng, int points);

// Representations
CheckReport check_rep_relations(const RepDesc& rep, const Rational& q, Mode mode, Rng& rng, int points);
CheckReport check_master_relations(const RepDesc& rep, const Rational& q, int K);

// Berezinian and central series
CheckReport check_ber_double(const RepDesc& rep, const Rational& q, Mode mode, Rng& rng, int points);
CheckReport check_centrality(const RepDesc& rep, const Rational& q, Mode mode, Rng& rng, int points, int ncoeffs);
CheckReport check_zeta(const RepDesc& rep, const Rational& q, Mode mode, Rng& rng, int points);
CheckReport check_liouville(const RepDesc& rep, const Rational& q, Mode mode, Rng& rng, int points);

// Minor identities
CheckReport check_decomposition(const RepDesc& rep, const Rational& q, Mode mode, Rng& rng, int points);
CheckReport check_jacobi(const RepDesc& rep, const Rational& q, Mode mode, Rng& rng, int points);
CheckReport check_schur(const RepDesc& rep, const Rational& q, Mode mode, Rng& rng, int points);
CheckReport check_sylvester(int k, const RepDesc& enlarged, const Rational& q, Mode mode, Rng& rng, int points);
CheckReport check_macmahon(const RepDesc& rep, const Rational& q, int k, Mode mode, Rng& rng, int points);

// Free algebra and morphisms
CheckReport check_hc_image(const GradedDim& dim, int K);
CheckReport check_omega(const RepDesc& rep, const Rational& q, Mode mode, Rng& rng, int points);
CheckReport check_rho(const RepDesc& rep, const Rational& q, Rng& rng, int points);
CheckReport check_psi(const RepDesc& rep, const Rational& q, int k, Rng& rng, int points);

}  // namespace sberez
