"""Bruck-Reilly extensions of finite chains of groups, with exact
verification of their arithmetic, order structure and zero-neighborhood
certificates."""

from .bicyclic import BicyclicElem, bmul, binv, oracle_mul
from .bruck_reilly import (
    Box,
    BRElem,
    BRSystem,
    brinv,
    brmul,
    eta,
    eta_congruent,
    hclass,
    idempotents_window,
    nat_order,
    nat_order_oracle,
    simplicity_witness,
    window_elements,
    zero_divisor_scan,
)
from .clifford import (
    ChainSemilattice,
    CliffordElement,
    CliffordSystem,
    cinv,
    cmul,
    idempotents,
    nat_order_idem,
    theta_pow,
    validate_system,
)
from .config import load_system, system_from_obj
from .groups import GroupHom, GroupTable, ValidationReport, cyclic_group, ginv, gmul, hom, validate_group, validate_hom
from .topology import (
    BasicZeroNbhd,
    BoxFamily,
    ContinuityCertificate,
    ZeroNbhdDescriptor,
    box_solve,
    classify_descriptor,
    continuity_cert_zero,
    meets_almost_all_boxes,
    pushforward_basic,
    pushforward_descriptor,
    row_exceptions_finite,
)

__version__ = "0.1.0"

__all__ = [
    "BicyclicElem", "bmul", "binv", "oracle_mul",
    "Box", "BRElem", "BRSystem", "brinv", "brmul", "eta", "eta_congruent",
    "hclass", "idempotents_window", "nat_order", "nat_order_oracle",
    "simplicity_witness", "window_elements", "zero_divisor_scan",
    "ChainSemilattice", "CliffordElement", "CliffordSystem", "cinv", "cmul",
    "idempotents", "nat_order_idem", "theta_pow", "validate_system",
    "load_system", "system_from_obj",
    "GroupHom", "GroupTable", "ValidationReport", "cyclic_group", "ginv",
    "gmul", "hom", "validate_group", "validate_hom",
    "BasicZeroNbhd", "BoxFamily", "ContinuityCertificate",
    "ZeroNbhdDescriptor", "box_solve", "classify_descriptor",
    "continuity_cert_zero", "meets_almost_all_boxes", "pushforward_basic",
    "pushforward_descriptor", "row_exceptions_finite",
    "__version__",
]
