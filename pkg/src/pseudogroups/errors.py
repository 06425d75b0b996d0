"""Exception types raised by validation and construction routines.

Every checker raises a subclass of :class:`CheckFailed` carrying a small
``witness`` object (usually a tuple of element indices) that pinpoints the
first law violation found.  Input problems (malformed tables, out-of-range
indices, bad files) raise :class:`InputError` instead.
"""


class InputError(ValueError):
    """Malformed input data: wrong shapes, out-of-range indices, bad JSON."""


class TooLarge(InputError):
    """A requested enumeration exceeds the configured size guard."""


class CheckFailed(AssertionError):
    """A structural law failed; ``witness`` identifies where."""

    def __init__(self, message, witness=None):
        super().__init__(message if witness is None else f"{message}: witness {witness!r}")
        self.witness = witness


# -- inverse semigroup validation --------------------------------------------

class NotAssociative(CheckFailed):
    pass


class NotInverse(CheckFailed):
    pass


# -- pseudogroup validation ---------------------------------------------------

class NoZero(CheckFailed):
    pass


class MissingJoin(CheckFailed):
    pass


class NotDistributive(CheckFailed):
    pass


class IdempotentsNotFrame(CheckFailed):
    pass


class NotCompatible(CheckFailed):
    pass


# -- presentations ------------------------------------------------------------

class NotStable(CheckFailed):
    pass


class RelationsNotRespected(CheckFailed):
    pass


class NucleusLawFailed(CheckFailed):
    pass


# -- supported actions and modules --------------------------------------------

class NotAction(CheckFailed):
    pass


class SupportLawFailed(CheckFailed):
    pass


class NotHomomorphism(CheckFailed):
    pass


# -- quantal frames and sheaves ------------------------------------------------

class QuantaleAxiomFailed(CheckFailed):
    pass


class CoverFails(CheckFailed):
    pass


class NotIsomorphic(CheckFailed):
    pass


class SheafAxiomFailed(CheckFailed):
    pass


class SectionEscape(CheckFailed):
    pass


class HilbertAxiomFailed(CheckFailed):
    pass


class CoveringFails(CheckFailed):
    pass


class AssociativityFails(CheckFailed):
    pass


# -- biactions and bimodules ----------------------------------------------------

class BiactionAxiomFailed(CheckFailed):
    pass


class CoveringFailsLeft(CoveringFails):
    pass


class CoveringFailsRight(CoveringFails):
    pass


class JoinMissing(CheckFailed):
    pass


class DistributivityFails(CheckFailed):
    pass


# -- enlargements ----------------------------------------------------------------

class JoinUndefined(CheckFailed):
    pass


class EnlargementFails(CheckFailed):
    pass


class E1Fails(EnlargementFails):
    pass


class E2Fails(EnlargementFails):
    pass


# -- invariants -------------------------------------------------------------------

class EquivalenceMismatch(CheckFailed):
    pass


class InvarianceViolated(CheckFailed):
    pass
