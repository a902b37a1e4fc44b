"""Weak-value tensors of projector products for pre- and post-selected qudit systems."""

from ._weakvis import (
    Ket,
    Scenario,
    TensorKind,
    WeakValueTensor,
    WeakvisError,
    apply_pauli_string,
    cli_main,
    compare_states,
    diagonal_cells,
    epr_pair,
    evolve,
    evolve_exact,
    expectation_tensor,
    inner,
    marginalize,
    normalize,
    closed_product_form,
    render,
    scenario,
    scenario_names,
    scheme_json,
    stabilizer_eigenvalue,
    tensor_product,
    total_sum,
    weak_tensor,
    weak_value,
)

__all__ = [
    "Ket",
    "Scenario",
    "TensorKind",
    "WeakValueTensor",
    "WeakvisError",
    "apply_pauli_string",
    "cli_main",
    "compare_states",
    "diagonal_cells",
    "epr_pair",
    "evolve",
    "evolve_exact",
    "expectation_tensor",
    "inner",
    "marginalize",
    "normalize",
    "closed_product_form",
    "render",
    "scenario",
    "scenario_names",
    "scheme_json",
    "stabilizer_eigenvalue",
    "tensor_product",
    "total_sum",
    "weak_tensor",
    "weak_value",
]
