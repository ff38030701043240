// SPDX-License-Identifier: Apache-2.0
//
// fdrelay - link-level simulator for wirelessly powered full-duplex MIMO relays
// Copyright (C) 2026 The fdrelay authors
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

#include "fdrelay/kernels/batch_sinr.hpp"

namespace fdrelay::kernels::detail
{

// Trials [begin, end) of the batch; scheme and dimensions already checked.
void batch_sinr_scalar(Scheme scheme, const ChannelBatch &batch, const SinrCoefficients &coeffs, double *out,
                       std::size_t begin, std::size_t end);

#if defined(FDRELAY_BUILD_AVX2)
void batch_sinr_avx2(Scheme scheme, const ChannelBatch &batch, const SinrCoefficients &coeffs, double *out);
#endif

} // namespace fdrelay::kernels::detail
