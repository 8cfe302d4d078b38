"""Character tables with power maps, fixed-point multiplicities over cyclic
subgroups, unisingularity verdicts, integrality certification for landing in
Sp_d(2), and the arithmetic classifier for L2(q) in characteristic 2.

The fixed-point multiplicity of an element g in a representation with
character chi is (1/o) sum_{i<o} chi(g^i); positivity on every odd-order
class certifies that the mod-2 reduction is unisingular.  chi(g^i) is
computed from the printed data alone: prime power maps give the class of
g^t for t = gcd(i, o), and the coprime part acts by a Galois automorphism
on the stored value.
"""

import re
from math import gcd

from .cyclotomic import Cyclotomic
from .errors import (
    IncompletePowerMap,
    InvariantViolation,
    NonIntegralMultiplicity,
    NotOddPrimePower,
    ParseError,
)


class ConjClass:
    def __init__(self, name, order, size=None, power_map=None):
        self.name = name
        self.order = order
        self.size = size
        self.power_map = dict(power_map or {})

    def __repr__(self):
        return "ConjClass(%s, order=%d, size=%s)" % (
            self.name, self.order, self.size)


class CharacterTable:
    """classes in column order; characters maps name -> list of Cyclotomic."""

    def __init__(self, order, classes, characters, irreducible_complete=False,
                 name=None):
        self.order = order
        self.classes = list(classes)
        self.class_index = {c.name: i for i, c in enumerate(self.classes)}
        self.characters = dict(characters)
        self.irreducible_complete = irreducible_complete
        self.name = name
        self.partial = any(c.size is None for c in self.classes) or any(
            not _power_map_complete(c) for c in self.classes)

    def char_names(self):
        return list(self.characters)

    def value(self, chi, cname):
        return self.characters[chi][self.class_index[cname]]

    def degree(self, chi):
        iden = self.identity_class()
        return self.value(chi, iden.name).to_int()

    def identity_class(self):
        for c in self.classes:
            if c.order == 1:
                return c
        raise InvariantViolation("no identity class (order 1)")

    def __repr__(self):
        return "CharacterTable(order=%d, %d classes, %d characters)" % (
            self.order, len(self.classes), len(self.characters))


def _power_map_complete(c):
    o = c.order
    q = 2
    while q * q <= o:
        if o % q == 0:
            if q not in c.power_map:
                return False
            while o % q == 0:
                o //= q
        q += 1
    return o == 1 or o in c.power_map


def _prime_factors(n):
    out = []
    q = 2
    while q * q <= n:
        while n % q == 0:
            out.append(q)
            n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


ZETA_RE = re.compile(r"^z(\d+)(?:\^(\d+))?$")


def _parse_term(term):
    value = Cyclotomic.integer(1)
    for part in term.split("*"):
        part = part.strip()
        if not part:
            raise ParseError("empty factor in term %r" % term)
        m = ZETA_RE.match(part)
        if m:
            value = value * Cyclotomic.zeta(int(m.group(1)),
                                            int(m.group(2) or 1))
        elif part == "sqrtm3":
            value = value * (Cyclotomic.integer(1)
                             + 2 * Cyclotomic.zeta(3))
        else:
            try:
                value = value * int(part)
            except ValueError:
                raise ParseError("unknown token %r" % part)
    return value


def parse_value(text):
    """Parse a character value: a signed sum of integer multiples of the
    tokens z<N>[^k] and sqrtm3, optionally wrapped as (sum)/int."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ParseError("empty value")
    den = 1
    if s.startswith("("):
        close = s.rfind(")")
        if close < 0 or not s[close + 1:].startswith("/"):
            raise ParseError("malformed parenthesized value %r" % text)
        try:
            den = int(s[close + 2:])
        except ValueError:
            raise ParseError("malformed denominator in %r" % text)
        s = s[1:close]
    total = Cyclotomic.integer(0)
    # split into signed terms at top level (no nested parentheses remain)
    for sign, term in re.findall(r"([+-]?)([^+-]+)", s):
        val = _parse_term(term)
        total = total - val if sign == "-" else total + val
    return total / den if den != 1 else total


def load_table(path):
    """Parse a structured-text table file.

    Sections: [meta] key=value lines (order required); [classes] lines
    name|order|size|pow_q=class,... (size and power maps may be empty);
    [characters] lines name|v1|...|vk with one value per class column.
    """
    section = None
    meta = {}
    classes = []
    characters = {}
    char_order = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("["):
                if line not in ("[meta]", "[classes]", "[characters]"):
                    raise ParseError("%s:%d: unknown section %s"
                                     % (path, lineno, line))
                section = line
                continue
            if section == "[meta]":
                if "=" not in line:
                    raise ParseError("%s:%d: expected key=value" % (path, lineno))
                k, v = line.split("=", 1)
                meta[k.strip()] = v.strip()
            elif section == "[classes]":
                parts = [p.strip() for p in line.split("|")]
                if len(parts) < 2:
                    raise ParseError("%s:%d: malformed class line" % (path, lineno))
                name = parts[0]
                try:
                    order = int(parts[1])
                except ValueError:
                    raise ParseError("%s:%d: bad class order" % (path, lineno))
                size = None
                if len(parts) > 2 and parts[2]:
                    size = int(parts[2])
                pmap = {}
                if len(parts) > 3 and parts[3]:
                    for item in parts[3].split(","):
                        if "=" not in item or not item.startswith("pow_"):
                            raise ParseError("%s:%d: bad power map entry %r"
                                             % (path, lineno, item))
                        key, target = item.split("=", 1)
                        pmap[int(key[4:])] = target.strip()
                classes.append(ConjClass(name, order, size, pmap))
            elif section == "[characters]":
                parts = [p.strip() for p in line.split("|")]
                name = parts[0]
                values = [parse_value(v) for v in parts[1:]]
                characters[name] = values
                char_order.append(name)
            else:
                raise ParseError("%s:%d: content outside any section"
                                 % (path, lineno))
    if "order" not in meta:
        raise ParseError("%s: missing order in [meta]" % path)
    order = int(meta["order"])
    complete = meta.get("irreducible_complete", "false").lower() == "true"
    table = CharacterTable(order, classes,
                           {n: characters[n] for n in char_order},
                           irreducible_complete=complete,
                           name=meta.get("name"))
    _check_invariants(table)
    return table


def _check_invariants(table):
    ncols = len(table.classes)
    for name, values in table.characters.items():
        if len(values) != ncols:
            raise InvariantViolation(
                "character %s has %d values for %d classes"
                % (name, len(values), ncols))
    sizes = [c.size for c in table.classes]
    if all(s is not None for s in sizes) and sum(sizes) != table.order:
        raise InvariantViolation(
            "class sizes sum to %d, group order is %d"
            % (sum(sizes), table.order))
    for c in table.classes:
        for q, target in c.power_map.items():
            if target not in table.class_index:
                raise InvariantViolation(
                    "power map of %s points to unknown class %s"
                    % (c.name, target))
            tcls = table.classes[table.class_index[target]]
            expected = c.order // gcd(c.order, q)
            if tcls.order != expected:
                raise InvariantViolation(
                    "class %s^%d should have order %d, %s has order %d"
                    % (c.name, q, expected, target, tcls.order))
    if table.irreducible_complete:
        for name in table.characters:
            total = Cyclotomic.integer(0)
            for c, v in zip(table.classes, table.characters[name]):
                total = total + c.size * v.norm_abs2()
            if not (total.is_rational_integer()
                    and total.to_int() == table.order):
                raise InvariantViolation(
                    "row orthogonality fails for %s: got %r, want %d"
                    % (name, total, table.order))


def _power_class(table, c, t):
    "The class of g^t for g in class c, via prime power maps; t | c.order."
    for q in _prime_factors(t):
        if q not in c.power_map:
            raise IncompletePowerMap(
                "class %s lacks pow_%d" % (c.name, q))
        c = table.classes[table.class_index[c.power_map[q]]]
    return c


def value_at_power(table, chi, cname, i):
    """chi(g^i) for g in the named class, from power maps plus Galois action.

    Write t = gcd(i, order): g^t's class comes from the prime power maps and
    g^i = (g^t)^u with u coprime to the order of g^t, so the value is the
    Galois conjugate sigma_u of the stored value of chi at that class.
    """
    c = table.classes[table.class_index[cname]]
    o = c.order
    i %= o
    t = gcd(i, o) if i else o
    base = _power_class(table, c, t)
    if i == 0:
        return table.characters[chi][table.class_index[base.name]]
    u = i // t
    val = table.characters[chi][table.class_index[base.name]]
    m = base.order
    if m == 1 or val.n == 1:
        return val
    if m % val.n:
        raise InvariantViolation(
            "value of %s at %s has conductor %d, element order is %d"
            % (chi, base.name, val.n, m))
    return val.lift(m).galois(u)


def fp_multiplicity(table, chi, cname):
    """Multiplicity of eigenvalue 1 for a class-c element:
    (1/o) sum_{i=0}^{o-1} chi(g^i).  Always a nonnegative rational integer
    for valid tables."""
    c = table.classes[table.class_index[cname]]
    o = c.order
    total = Cyclotomic.integer(0)
    for i in range(o):
        total = total + value_at_power(table, chi, cname, i)
    avg = total / o
    if not avg.is_rational_integer():
        raise NonIntegralMultiplicity(
            "fp multiplicity of %s at %s is %r" % (chi, cname, avg))
    out = avg.to_int()
    if out < 0:
        raise NonIntegralMultiplicity(
            "fp multiplicity of %s at %s is negative: %d" % (chi, cname, out))
    return out


def is_unisingular_char(table, chi, odd_only=True):
    """True iff fp_multiplicity > 0 on every class (odd-order classes only
    by default, matching characteristic 2).  Returns None when the table is
    partial and a needed power map or class size is unavailable."""
    verdict = True
    for c in table.classes:
        if odd_only and c.order % 2 == 0:
            continue
        try:
            if fp_multiplicity(table, chi, c.name) == 0:
                verdict = False
        except IncompletePowerMap:
            return None
    if table.partial and verdict:
        # a partial table may omit whole classes; a positive verdict from
        # the listed columns alone is not conclusive
        return None
    return verdict


def symplectic_f2_integrality(table, chi):
    """'certified' iff the degree is even and every odd-order class value is
    a rational integer (sufficient for realizability inside Sp_d(2));
    'inconclusive' otherwise."""
    if table.degree(chi) % 2:
        return "inconclusive"
    for c in table.classes:
        if c.order % 2 == 0:
            continue
        if not table.value(chi, c.name).is_rational_integer():
            return "inconclusive"
    return "certified"


def char_report(table, chi, odd_only=True):
    "JSON-ready verdict report for one character."
    fp = {}
    for c in table.classes:
        if odd_only and c.order % 2 == 0:
            continue
        try:
            fp[c.name] = fp_multiplicity(table, chi, c.name)
        except IncompletePowerMap:
            fp[c.name] = None
    verdict = is_unisingular_char(table, chi, odd_only)
    return {
        "character": chi,
        "degree": table.degree(chi),
        "unisingular": verdict,
        "sympF2": symplectic_f2_integrality(table, chi),
        "fp": fp,
    }


class Psl2Verdict:
    def __init__(self, q, degree, exists, unisingular, symp_f2, conditions):
        self.q = q
        self.degree = degree
        self.exists = exists
        self.unisingular = unisingular
        self.symp_f2 = symp_f2
        self.conditions = conditions

    def to_json(self):
        return {
            "q": self.q,
            "degree": self.degree,
            "exists": self.exists,
            "unisingular": self.unisingular,
            "sympF2": self.symp_f2,
            "conditions": self.conditions,
        }

    def __repr__(self):
        return ("Psl2Verdict(q=%d, d=%d, unisingular=%s, sympF2=%s)"
                % (self.q, self.degree, self.unisingular, self.symp_f2))


def _odd_prime_power(q):
    "Return (r, a) with q = r^a for an odd prime r, else raise."
    if q <= 3 or q % 2 == 0:
        raise NotOddPrimePower("q must be an odd prime power > 3, got %d" % q)
    r = 3
    while r * r <= q:
        if q % r == 0:
            break
        r += 2
    else:
        return q, 1
    a = 0
    m = q
    while m % r == 0:
        m //= r
        a += 1
    if m != 1:
        raise NotOddPrimePower("%d is not a prime power" % q)
    return r, a


def psl2_classify(q):
    """Unisingularity and Sp_d(2)-membership verdicts for the irreducible
    2-modular representations of L2(q) of degree (q-1)/2, q-1, and q+1,
    plus the PGL2(q) note at degree q-1."""
    r, a = _odd_prime_power(q)
    out = []

    d = (q - 1) // 2
    uni = (q > r * r) and ((q + 1) % 4 == 0)
    out.append(Psl2Verdict(
        q, d, exists=True, unisingular=uni, symp_f2=False,
        conditions=["q > r^2: %s" % (q > r * r),
                    "4 | (q+1): %s" % ((q + 1) % 4 == 0),
                    "degree odd, never certified for Sp_d(2)"]))

    d = q - 1
    exists = a > 1  # q must not be prime
    uni = exists
    symp = exists and (q + 1) % 3 == 0
    out.append(Psl2Verdict(
        q, d, exists=exists, unisingular=uni, symp_f2=symp,
        conditions=["q not prime: %s" % exists,
                    "3 | (q+1): %s" % ((q + 1) % 3 == 0)]))

    d = q + 1
    symp = (q - 1) % 3 == 0
    out.append(Psl2Verdict(
        q, d, exists=True, unisingular=True, symp_f2=symp,
        conditions=["always unisingular",
                    "3 | (q-1): %s" % ((q - 1) % 3 == 0)]))

    pgl = (a > 1) and (q + 1) % 4 == 0
    out.append(Psl2Verdict(
        q, q - 1, exists=a > 1, unisingular=pgl, symp_f2=pgl,
        conditions=["PGL2(q) representation",
                    "q not prime: %s" % (a > 1),
                    "4 | (q+1): %s" % ((q + 1) % 4 == 0)]))
    return out
