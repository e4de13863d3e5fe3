"""Cohomology of a genus-g surface and of its unit tangent bundle, with
F2 and Z coefficients, in fixed coordinates.

A degree-1 class over F2 is stored as 2g surface bits (its values on
the standard a_i, b_i loops, in presentation order a1 b1 a2 b2 ...)
plus one fiber bit (its value on the fiber circle).  Degree-2 classes
are stored as the single bit carried by the image of the surface
fundamental class; all invariants computed by this package land there.
The torsion of the integral H^2 of the unit tangent bundle is cyclic of
order 2g-2, generated by the image of the fundamental class.
"""

from .errors import InvalidInput, UnsupportedCupError


class CohomClassF2:
    """A mod-2 class on the unit tangent bundle, degree 1 or 2.

    Degree 1: surface_bits (length 2g) plus fiber_bit.
    Degree 2: a single surface_bit; the fiber-involving part of H^2 is
    deliberately not modelled (see cup_f2).
    """

    def __init__(self, genus, degree, bits, fiber_bit=0):
        if genus < 2:
            raise InvalidInput("genus must be >= 2, got %r" % (genus,))
        if degree == 1:
            bits = tuple(int(b) % 2 for b in bits)
            if len(bits) != 2 * genus:
                raise InvalidInput(
                    "degree-1 class needs %d surface bits, got %d"
                    % (2 * genus, len(bits)))
        elif degree == 2:
            if fiber_bit:
                raise InvalidInput("degree-2 classes carry no fiber bit here")
            bits = (int(bits) % 2,)
        else:
            raise InvalidInput("only degrees 1 and 2 are modelled")
        self.genus = genus
        self.degree = degree
        self.surface_bits = bits
        self.fiber_bit = int(fiber_bit) % 2

    @classmethod
    def zero(cls, genus, degree=1):
        if degree == 1:
            return cls(genus, 1, (0,) * (2 * genus))
        return cls(genus, 2, 0)

    @property
    def surface_bit(self):
        assert self.degree == 2
        return self.surface_bits[0]

    def is_zero(self):
        return not (any(self.surface_bits) or self.fiber_bit)

    def bit_on(self, name):
        """Value on a generator loop, e.g. 'a1' or 'b3' (degree 1)."""
        assert self.degree == 1
        kind, idx = name[0], int(name[1:])
        if kind not in "ab" or not 1 <= idx <= self.genus:
            raise InvalidInput("unknown generator %r" % (name,))
        return self.surface_bits[2 * (idx - 1) + (0 if kind == "a" else 1)]

    def __add__(self, other):
        self._check_compatible(other)
        if self.degree == 1:
            bits = tuple((x + y) % 2
                         for x, y in zip(self.surface_bits, other.surface_bits))
            return CohomClassF2(self.genus, 1, bits,
                                (self.fiber_bit + other.fiber_bit) % 2)
        return CohomClassF2(self.genus, 2,
                            (self.surface_bits[0] + other.surface_bits[0]) % 2)

    def scale(self, k):
        """Multiply by an integer (only the parity of k matters)."""
        if k % 2:
            return self
        return CohomClassF2.zero(self.genus, self.degree)

    def _check_compatible(self, other):
        if not isinstance(other, CohomClassF2):
            raise InvalidInput("expected a CohomClassF2, got %r" % (other,))
        if other.genus != self.genus or other.degree != self.degree:
            raise InvalidInput("classes live on different spaces")

    def __eq__(self, other):
        return (isinstance(other, CohomClassF2)
                and self.genus == other.genus
                and self.degree == other.degree
                and self.surface_bits == other.surface_bits
                and self.fiber_bit == other.fiber_bit)

    def __hash__(self):
        return hash((self.genus, self.degree, self.surface_bits,
                     self.fiber_bit))

    def __repr__(self):
        if self.degree == 1:
            return "CohomClassF2(g=%d, deg=1, bits=%s, fiber=%d)" % (
                self.genus, "".join(str(b) for b in self.surface_bits),
                self.fiber_bit)
        return "CohomClassF2(g=%d, deg=2, bit=%d)" % (
            self.genus, self.surface_bits[0])


class TorsionClassZ:
    """Element of the torsion of the integral H^2 of the unit tangent
    bundle: the cyclic group of order 2g-2 generated by the image of
    the surface fundamental class."""

    def __init__(self, genus, value):
        if genus < 2:
            raise InvalidInput("genus must be >= 2, got %r" % (genus,))
        self.genus = genus
        self.order = 2 * genus - 2
        self.value = int(value) % self.order

    def __add__(self, other):
        if not isinstance(other, TorsionClassZ) or other.genus != self.genus:
            raise InvalidInput("cannot add torsion classes of different genus")
        return TorsionClassZ(self.genus, self.value + other.value)

    def __neg__(self):
        return TorsionClassZ(self.genus, -self.value)

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.order
        return (isinstance(other, TorsionClassZ)
                and self.genus == other.genus and self.value == other.value)

    def __hash__(self):
        return hash((self.genus, self.value))

    def __repr__(self):
        return "TorsionClassZ(g=%d, %d mod %d)" % (
            self.genus, self.value, self.order)


def cohomology_groups(genus, coefficients="Z"):
    """Ranks and torsion of H^k (k = 0..3) for the surface and its unit
    tangent bundle.

    With Z coefficients each degree maps to (free rank, torsion orders);
    with F2 coefficients to the F2-dimension.
    """
    if genus < 2:
        raise InvalidInput("genus must be >= 2, got %r" % (genus,))
    g = genus
    if coefficients == "Z":
        surface = {0: (1, ()), 1: (2 * g, ()), 2: (1, ()), 3: (0, ())}
        unit_tangent = {0: (1, ()), 1: (2 * g, ()),
                        2: (2 * g, (2 * g - 2,)), 3: (1, ())}
    elif coefficients == "F2":
        surface = {0: 1, 1: 2 * g, 2: 1, 3: 0}
        unit_tangent = {0: 1, 1: 2 * g + 1, 2: 2 * g + 1, 3: 1}
    else:
        raise InvalidInput("coefficients must be 'Z' or 'F2'")
    return {"surface": surface, "unit_tangent": unit_tangent}


def cup_f2(x, y):
    """Cup product of two degree-1 classes pulled back from the surface.

    The product is the mod-2 intersection pairing of the surface bits,
    returned as a degree-2 class.  Classes with a nonzero fiber bit are
    refused: the ring structure involving the fiber class is not
    modelled (the only fiber-involving product we ever need is the
    self-cup of a spin class, handled separately in sw_tensor).
    """
    x._check_compatible(y)
    if x.degree != 1:
        raise InvalidInput("cup_f2 expects degree-1 classes")
    if x.fiber_bit or y.fiber_bit:
        raise UnsupportedCupError(
            "cup products involving the fiber class are not modelled")
    total = 0
    for i in range(x.genus):
        total += x.surface_bits[2 * i] * y.surface_bits[2 * i + 1]
        total += x.surface_bits[2 * i + 1] * y.surface_bits[2 * i]
    return CohomClassF2(x.genus, 2, total)


def _self_cup(x):
    # A class restricting nontrivially to the fiber is a spin class of
    # the surface; its square is the constant (g-1) parity, independent
    # of the surface bits.  Surface classes square to zero.
    if x.fiber_bit:
        return CohomClassF2(x.genus, 2, (x.genus - 1) % 2)
    return cup_f2(x, x)


def _as_deg2(genus, value):
    if isinstance(value, CohomClassF2):
        if value.degree != 2 or value.genus != genus:
            raise InvalidInput("expected a degree-2 class of the same genus")
        return value
    return CohomClassF2(genus, 2, int(value))


def sw_tensor(sw_l, sw_w, n):
    """Stiefel-Whitney classes of (line bundle) tensor (n-plane bundle).

    sw_l: degree-1 class of the line bundle.  sw_w: pair (degree-1
    class, degree-2 class or bit) of the n-plane bundle.  Returns the
    pair (sw1, sw2) of the tensor product:

        sw1 = n*sw_l + sw1_w
        sw2 = C(n,2)*sw_l^2 + (n-1)*sw_l.sw1_w + sw2_w

    Cup terms are only evaluated when their coefficient is odd; a
    fiber-involving cross cup (sw_l with fiber bit against a nonzero
    sw1_w) is refused by cup_f2 rather than guessed.
    """
    if n < 1:
        raise InvalidInput("n must be >= 1, got %r" % (n,))
    sw1_w, sw2_w = sw_w
    sw_l._check_compatible(sw1_w)
    genus = sw_l.genus
    sw1_out = sw_l.scale(n) + sw1_w
    sw2_out = _as_deg2(genus, sw2_w)
    if (n * (n - 1) // 2) % 2:
        sw2_out = sw2_out + _self_cup(sw_l)
    if (n - 1) % 2 and not sw1_w.is_zero():
        sw2_out = sw2_out + cup_f2(sw_l, sw1_w)
    return sw1_out, sw2_out


def mv_connecting(pair, genus, genus_l):
    """Connecting map of the Mayer-Vietoris sequence for a separating
    curve, from Z^2 (classes over the curve's torus) onto the torsion
    of the integral H^2 of the unit tangent bundle.

    Normalized to send (0,1) to the generator; its kernel is the
    lattice spanned by (1, 1-2*genus_l) and (-1, 1-2*genus_r).
    """
    if not 1 <= genus_l <= genus - 1:
        raise InvalidInput("genus_l must be in [1, genus-1]")
    s, t = pair
    return TorsionClassZ(genus, int(t) + int(s) * (2 * genus_l - 1))


def admissible(sw1, sw2_bit, n):
    """Can (sw1, sw2) occur for a maximal representation into Sp(2n,R)?

    The only constraint is the fiber bit of sw1: it must equal n mod 2.
    Any surface bits and any sw2 bit are admissible.
    """
    if n < 1:
        raise InvalidInput("n must be >= 1, got %r" % (n,))
    if sw1.degree != 1:
        raise InvalidInput("sw1 must be a degree-1 class")
    _as_deg2(sw1.genus, sw2_bit)  # validate only
    return sw1.fiber_bit == n % 2


def epsilon_twist_euler(e, eps_minus1):
    """Effect of twisting by a central character on the relative Euler
    class: unchanged if eps(-1) = +1, shifted by (g-1) if eps(-1) = -1."""
    if eps_minus1 not in (1, -1):
        raise InvalidInput("eps_minus1 must be +1 or -1")
    if eps_minus1 == 1:
        return e
    return TorsionClassZ(e.genus, e.value + e.genus - 1)
