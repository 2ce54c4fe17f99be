"""The nine metamorphic relations and a dispatcher over them."""
from __future__ import annotations

from typing import Callable, Optional

from ..syntax import SyntaxTree, parse_java, text_differs
from .base import EMPTY_RENAMES, MrContext, MrId, MrOutcome, RenameMap, combo_code, parse_combo_code
from .blocks import mr6_dummy_variable, mr7_adding_comments, mr8_variable_declaration, mr9_for_to_while
from .expressions import mr3_assign_expression, mr4_conditional_expression, mr5_binary_expression
from .renaming import mr1_variable_renaming, mr2_method_renaming

MrFunc = Callable[[str, MrContext, Optional[SyntaxTree]], MrOutcome]

REGISTRY: dict[MrId, MrFunc] = {
    MrId.MR1_VariableRenaming: mr1_variable_renaming,
    MrId.MR2_MethodRenaming: mr2_method_renaming,
    MrId.MR3_AssignExpression: mr3_assign_expression,
    MrId.MR4_ConditionalExpression: mr4_conditional_expression,
    MrId.MR5_BinaryExpression: mr5_binary_expression,
    MrId.MR6_DummyVariable: mr6_dummy_variable,
    MrId.MR7_AddingComments: mr7_adding_comments,
    MrId.MR8_VariableDeclaration: mr8_variable_declaration,
    MrId.MR9_ForToWhileLoop: mr9_for_to_while,
}


def apply_mr(mr_id, source: str, ctx: Optional[MrContext] = None) -> MrOutcome:
    """Apply one relation; ``applied`` reflects an actual (newline-normalized) text change.

    Only :class:`~javamorph.syntax.ParseFatal` escapes.
    """
    mr_id = MrId.parse(mr_id)
    ctx = ctx if ctx is not None else MrContext()
    tree = parse_java(source)
    out = REGISTRY[mr_id](source, ctx, tree)
    applied = text_differs(source, out.text)
    if not applied:
        return MrOutcome(source, False, EMPTY_RENAMES, 0)
    return MrOutcome(out.text, True, out.rename_map, max(out.edits_count, 1))


__all__ = [
    "MrId", "MrContext", "MrOutcome", "RenameMap", "EMPTY_RENAMES", "REGISTRY", "apply_mr",
    "combo_code", "parse_combo_code",
    "mr1_variable_renaming", "mr2_method_renaming", "mr3_assign_expression",
    "mr4_conditional_expression", "mr5_binary_expression", "mr6_dummy_variable",
    "mr7_adding_comments", "mr8_variable_declaration", "mr9_for_to_while",
]
