# Copyright 2026 The wdwvqe Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Minisuperspace Wheeler-DeWitt Hamiltonians on a simulated quantum computer.

Thin wrapper over the C++ core: grid operators, Pauli decomposition, the
exact Hermitian eigensolver, and VQE with an Ry ansatz and SPSA.
"""

from ._core import (
    Grid,
    InvalidArgument,
    NumericalError,
    __version__,
    build_model,
    decompose,
    dft_matrix,
    eigh,
    expectation,
    model_names,
    momentum_operator,
    position_operator,
    reconstruct,
    run_vqe,
    sample,
    simulate,
    to_openqasm,
    wheeler_dewitt_report,
)

__all__ = [
    "Grid",
    "InvalidArgument",
    "NumericalError",
    "__version__",
    "build_model",
    "decompose",
    "dft_matrix",
    "eigh",
    "expectation",
    "model_names",
    "momentum_operator",
    "position_operator",
    "reconstruct",
    "run_vqe",
    "sample",
    "simulate",
    "to_openqasm",
    "wheeler_dewitt_report",
]
