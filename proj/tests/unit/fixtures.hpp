// SPDX-License-Identifier: Apache-2.0
//
// me-ris: rate optimization toolkit for movable-element RIS links
// Copyright (C) 2026 The me-ris authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "meris/cascade.hpp"
#include "meris/geometry.hpp"

namespace fixtures
{

// Channel with every angle equal to `angle`, unit path responses and an
// all-ones BS field-response matrix.
inline meris::ChannelRealization unit_channel(int m, int l_bs, int l_su, double wavelength, double angle = 0.0)
{
    using namespace meris;
    ChannelRealization chan;
    chan.wavelength = wavelength;
    chan.angles.theta_bs_b = RVector::Constant(l_bs, angle);
    chan.angles.phi_bs_b = RVector::Constant(l_bs, angle);
    chan.angles.theta_bs_s = RVector::Constant(l_bs, angle);
    chan.angles.phi_bs_s = RVector::Constant(l_bs, angle);
    chan.angles.theta_su = RVector::Constant(l_su, angle);
    chan.angles.phi_su = RVector::Constant(l_su, angle);
    chan.sigma_bs = CVector::Ones(l_bs);
    chan.sigma_s = CRowVector::Ones(l_su);
    chan.bs_frm = CMatrix::Ones(l_bs, m);
    chan.d_bs = 15.0;
    chan.d_s = 30.0;
    return chan;
}

// Single path BS -> RIS -> user with distinct incident and reflected angles,
// so the element phase depends on position.
inline meris::ChannelRealization single_path_channel(double wavelength, meris::cdouble sigma_bs = {0.8, -0.3},
                                                     meris::cdouble sigma_s = {-0.4, 0.9})
{
    auto chan = unit_channel(1, 1, 1, wavelength);
    chan.angles.theta_bs_s[0] = 0.3;
    chan.angles.phi_bs_s[0] = -0.7;
    chan.angles.theta_su[0] = -0.5;
    chan.angles.phi_su[0] = 1.1;
    chan.sigma_bs[0] = sigma_bs;
    chan.sigma_s[0] = sigma_s;
    chan.bs_frm(0, 0) = std::polar(1.0, 0.4);
    return chan;
}

} // namespace fixtures
