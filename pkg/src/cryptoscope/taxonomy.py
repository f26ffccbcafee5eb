"""Instruction taxonomy: the closed category set and the mnemonic table.

The category ordering below is load-bearing: it defines the layout of
category feature vectors everywhere in the pipeline.
"""

from __future__ import annotations

import enum

from .errors import UnknownMnemonic


class Category(enum.Enum):
    BINARY = "BINARY"
    LOGICAL = "LOGICAL"
    SHIFT = "SHIFT"
    DATAXFER = "DATAXFER"
    STACK = "STACK"
    COND_BR = "COND_BR"
    UNCOND_BR = "UNCOND_BR"
    CALL_RET = "CALL_RET"
    STRINGOP = "STRINGOP"
    NOP = "NOP"
    MISC = "MISC"


#: Fixed vector layout for category features.
CATEGORY_ORDER: tuple[Category, ...] = tuple(Category)

#: Bitwise arithmetic is the union of the logical and shift categories.
BITWISE_CATEGORIES = frozenset({Category.LOGICAL, Category.SHIFT})

#: Every mnemonic the generator can emit, with its one category.
MNEMONIC_CATEGORY: dict[str, Category] = {
    # arithmetic / comparison
    "add": Category.BINARY,
    "sub": Category.BINARY,
    "mul": Category.BINARY,
    "div": Category.BINARY,
    "inc": Category.BINARY,
    "dec": Category.BINARY,
    "neg": Category.BINARY,
    "cmp": Category.BINARY,
    # bitwise logic
    "xor": Category.LOGICAL,
    "and": Category.LOGICAL,
    "or": Category.LOGICAL,
    "not": Category.LOGICAL,
    "test": Category.LOGICAL,
    # shifts and rotates
    "shl": Category.SHIFT,
    "shr": Category.SHIFT,
    "rol": Category.SHIFT,
    "ror": Category.SHIFT,
    # data movement
    "mov_load": Category.DATAXFER,
    "mov_store": Category.DATAXFER,
    "mov_reg": Category.DATAXFER,
    "xchg": Category.DATAXFER,
    # stack
    "push": Category.STACK,
    "pop": Category.STACK,
    # branches
    "jz": Category.COND_BR,
    "jnz": Category.COND_BR,
    "jl": Category.COND_BR,
    "jg": Category.COND_BR,
    "jmp": Category.UNCOND_BR,
    # procedure linkage
    "call": Category.CALL_RET,
    "ret": Category.CALL_RET,
    # string ops (one event per repeated iteration)
    "scasb_rep": Category.STRINGOP,
    "movsb_rep": Category.STRINGOP,
    "cmpsb_rep": Category.STRINGOP,
    # padding / housekeeping
    "nop": Category.NOP,
    "lea": Category.MISC,
    "leave": Category.MISC,
}


def categorize(mnemonic: str) -> Category:
    """Return the unique category of a mnemonic.

    Raises UnknownMnemonic for anything outside the taxonomy table.
    """
    try:
        return MNEMONIC_CATEGORY[mnemonic]
    except KeyError:
        raise UnknownMnemonic(f"mnemonic not in taxonomy: {mnemonic!r}") from None
