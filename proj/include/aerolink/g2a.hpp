// aerolink - link statistics for RIS-assisted UAV relaying under channel aging
// Copyright (C) 2026 The aerolink authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "aerolink/channel.hpp"
#include "aerolink/specfun.hpp"

#include <vector>

namespace aerolink
{
    // BS -> UAV hop with delayed-CSI MRT. `los` holds the unit-modulus LoS entries of the
    // estimate; empty means all ones.
    struct G2ALink
    {
        int M = 1;
        double K = 0.0;
        double rho = 1.0;
        double gamma_bar = 1.0;
        CVec los;
    };

    void validate(const G2ALink &link);

    // sum_m weights[m] * ncchi2(dofs[m], lambda, gamma_bar)
    struct G2AMixture
    {
        std::vector<double> weights;
        std::vector<double> dofs;
        double lambda = 0.0;
        double gamma_bar = 1.0;
    };

    G2AMixture mixture_params(const G2ALink &link);

    double g2a_pdf(const G2ALink &link, double x);
    double g2a_cdf(const G2ALink &link, double x);
    double g2a_pdf(const G2AMixture &mix, double x);
    double g2a_cdf(const G2AMixture &mix, double x);

    // Direct Bessel-series density, kept as an independent evaluation path.
    double g2a_pdf_closed(const G2ALink &link, double x);

    double g2a_mean(const G2ALink &link);

    // Linear small-x form of the CDF.
    double g2a_cdf_asymptotic(const G2ALink &link, double x);
    // Slope of the linear form: F ~ slope * x.
    double g2a_cdf_slope(const G2ALink &link);
}
