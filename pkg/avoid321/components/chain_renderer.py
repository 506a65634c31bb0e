"""Dump of the permutation -> tableaux -> Dyck path chain."""

import logging
import os
from typing import Any

from jinja2 import Environment, FileSystemLoader

from avoid321.components.dyck import (
    DyckPath,
    path_descents,
    path_descents_inverse,
    path_ldes,
    path_lind,
    peaks,
    tail,
)
from avoid321.components.permutation import (
    Permutation,
    descent_set,
    format_permutation,
    inv,
    inverse,
    inverse_descent_set,
    ldes,
    lind,
    sign,
)
from avoid321.components.tableaux import glue, phi_inverse, rsk, tableau_to_path

logger = logging.getLogger(__name__)


def build_chain(p: Permutation) -> dict[str, Any]:
    """Every stage of the chain for p plus the statistics at both ends.

    Raises:
        PatternViolationError: If p contains 321
    """
    pair = rsk(p)
    rect = glue(pair)
    path = tableau_to_path(rect)
    return {
        "perm": format_permutation(p),
        "inverse": format_permutation(inverse(p)),
        "P": pair.P,
        "Q": pair.Q,
        "T": rect,
        "path": path,
        "perm_stats": {
            "inv": inv(p),
            "ldes": ldes(p),
            "lind": lind(p),
            "sign": sign(p),
            "des": descent_set(p),
            "ides": inverse_descent_set(p),
        },
        "path_stats": {
            "peaks": list(peaks(path)),
            "ldes": path_ldes(path),
            "lind": path_lind(path),
            "tail": tail(path),
            "des": path_descents(path),
            "ides": path_descents_inverse(path),
        },
    }


def build_chain_from_path(path: DyckPath) -> dict[str, Any]:
    """Chain for the permutation a path comes from."""
    return build_chain(phi_inverse(path))


def chain_to_json(chain: dict[str, Any]) -> dict[str, Any]:
    """JSON-safe copy: tableaux as row arrays, sets as index lists."""
    result: dict[str, Any] = {
        "perm": chain["perm"],
        "inverse": chain["inverse"],
        "P": chain["P"].to_json(),
        "Q": chain["Q"].to_json(),
        "T": chain["T"].to_json(),
        "path": str(chain["path"]),
    }
    for side in ("perm_stats", "path_stats"):
        result[side] = {
            key: list(value.indices) if hasattr(value, "indices") else value
            for key, value in chain[side].items()
        }
    return result


class ChainRenderer:
    """Renders a chain dump through the ``chain.j2`` template."""

    def __init__(self, template_dir: str | None = None, template_name: str = "chain.j2"):
        """Initialize the Jinja2 environment.

        Args:
            template_dir: Directory holding the template; falls back to the
                package templates when missing
            template_name: Template file name
        """
        package_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
        package_dir = os.path.join(package_root, "templates")
        if template_dir is None or not os.path.exists(template_dir):
            if template_dir is not None:
                logger.warning(
                    f"Template directory '{template_dir}' not found, using package templates"
                )
            template_dir = package_dir

        self.template_name = template_name
        self.env = Environment(
            loader=FileSystemLoader(template_dir), trim_blocks=True, lstrip_blocks=True
        )
        logger.info(f"ChainRenderer initialized with templates from: {template_dir}")

    def render(self, chain: dict[str, Any]) -> str:
        template = self.env.get_template(self.template_name)
        rect = chain["T"]
        return template.render(
            perm=chain["perm"],
            inverse=chain["inverse"],
            perm_stats=chain["perm_stats"],
            path_stats=chain["path_stats"],
            P_rows=chain["P"].rows_text(),
            Q_rows=chain["Q"].rows_text(),
            T_rows=rect.rows_text(),
            T_shape=f"({rect.semilength},{rect.semilength})",
            path=str(chain["path"]),
        )
