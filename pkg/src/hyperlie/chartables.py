"""Exact irreducible character tables and multiplicity reports.

The symmetric group table comes from the Murnaghan-Nakayama border-strip
recursion (computed on first-column hook encodings).  The signed-group table
is built row by row from the class-level induction formula over the
two-block subgroup: the row indexed by a pair of partitions (alpha, beta)
with |alpha| = a, |beta| = b takes, at the class mu, the value

    Z(mu) * sum over splittings mu = mu1 cup mu2, |mu1| = a, |mu2| = b of
        chi^alpha(merge mu1) * chi^beta(merge mu2) * (-1)^(#negative parts
        of mu2) / (Z(mu1) * Z(mu2)),

where merge forgets signs and Z denotes centralizer orders.  Correctness is
certified by orthogonality and the degree-sum identity rather than by the
construction itself; any non-integer appearing anywhere is a hard error.

Multiplicity reports for the index-2 subgroups never compute split-class
character values: restriction patterns are decided by tensoring rows with
the defining linear character and comparing values, and split rows
contribute two constituents carrying half the row multiplicity each.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from math import factorial

from .combinatorics import Bipartition, Partition, bipartitions, partitions
from .group import centralizer_order, class_size, group_order
from .limits import check
from .rootcount import ClassFunction, s_class_size, twist_of_class

_NU_SUBGROUP = {"chi": "D", "chiP": "Z2A", "chichiP": "AB"}


# ---------------------------------------------------------------------------
# symmetric group table (Murnaghan-Nakayama)


@lru_cache(maxsize=None)
def sn_char(lam: Partition, mu: Partition) -> int:
    """Irreducible symmetric group character of shape lam at class mu."""
    if not mu:
        return 1
    r = mu[0]
    rest = mu[1:]
    length = len(lam)
    beta = [lam[i] + (length - 1 - i) for i in range(length)]
    occupied = set(beta)
    total = 0
    for pos, b in enumerate(beta):
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beta if target < c < b)
        new_beta = sorted([target if i == pos else c for i, c in enumerate(beta)], reverse=True)
        new_lam = tuple(
            x for x in (new_beta[i] - (length - 1 - i) for i in range(length)) if x > 0
        )
        total += (-1) ** height * sn_char(new_lam, rest)
    return total


@dataclass(frozen=True)
class CharacterTable:
    group: str
    n: int
    row_labels: tuple
    col_labels: tuple
    rows: tuple  # rows[i][j] = value of row i at class j
    class_sizes: tuple
    order: int

    def row(self, label):
        return self.rows[self.row_labels.index(label)]

    def degrees(self) -> tuple:
        j = self._identity_index()
        return tuple(r[j] for r in self.rows)

    def _identity_index(self) -> int:
        if self.group == "S":
            return self.col_labels.index((1,) * self.n)
        return self.col_labels.index(Bipartition((1,) * self.n, ()))

    def encode_row_label(self, label) -> str:
        if self.group == "S":
            return "[" + ",".join(str(i) for i in label) + "]"
        return label.encode()

    def to_csv(self) -> str:
        header = [""] + [self.encode_row_label(c) for c in self.col_labels]
        lines = [",".join(header)]
        for label, row in zip(self.row_labels, self.rows):
            lines.append(",".join([self.encode_row_label(label)] + [str(v) for v in row]))
        return "\n".join(lines)


@lru_cache(maxsize=None)
def sn_table(n: int) -> CharacterTable:
    check("sn_table", n)
    labels = partitions(n)
    rows = tuple(tuple(sn_char(lam, mu) for mu in labels) for lam in labels)
    table = CharacterTable(
        group="S",
        n=n,
        row_labels=labels,
        col_labels=labels,
        rows=rows,
        class_sizes=tuple(s_class_size(mu) for mu in labels),
        order=factorial(n),
    )
    _certify(table)
    return table


def _merge(bp: Bipartition) -> Partition:
    return tuple(sorted(bp.plus + bp.minus, reverse=True))


def _splittings(mu: Bipartition):
    """All ways to split mu's part multiset in two, with exact coefficients.

    Yields (a, merge1, merge2, sign2, Fraction(1, Z1 * Z2)) where a is the
    size of the first half and sign2 the sign character value of the second.
    """
    items = sorted(mu.counts().items())
    choices = [range(b + 1) for (_, b) in items]
    for picks in iproduct(*choices):
        plus1: list[int] = []
        minus1: list[int] = []
        plus2: list[int] = []
        minus2: list[int] = []
        for ((size, sign), b), c in zip(items, picks):
            first, second = [size] * c, [size] * (b - c)
            if sign == 1:
                plus1 += first
                plus2 += second
            else:
                minus1 += first
                minus2 += second
        mu1 = Bipartition(tuple(sorted(plus1, reverse=True)), tuple(sorted(minus1, reverse=True)))
        mu2 = Bipartition(tuple(sorted(plus2, reverse=True)), tuple(sorted(minus2, reverse=True)))
        sign2 = -1 if len(mu2.minus) % 2 else 1
        yield (
            mu1.n,
            _merge(mu1),
            _merge(mu2),
            sign2,
            Fraction(1, centralizer_order(mu1) * centralizer_order(mu2)),
        )


@lru_cache(maxsize=None)
def bn_table(n: int) -> CharacterTable:
    """Irreducible character table of the rank-n signed permutation group."""
    check("bn_table", n)
    classes = bipartitions(n)
    cents = [centralizer_order(mu) for mu in classes]

    # per class: splitting terms bucketed by the size of the first half
    split_by_class: list[dict[int, list]] = []
    for mu in classes:
        buckets: dict[int, list] = {}
        for a, m1, m2, sign2, coeff in _splittings(mu):
            buckets.setdefault(a, []).append((m1, m2, sign2, coeff))
        split_by_class.append(buckets)

    rows = []
    for lam in classes:  # row labels share the class enumeration order
        alpha, beta = lam.plus, lam.minus
        a = sum(alpha)
        row = []
        for ci, mu in enumerate(classes):
            total = Fraction(0)
            for m1, m2, sign2, coeff in split_by_class[ci].get(a, ()):
                c1 = sn_char(alpha, m1)
                if c1 == 0:
                    continue
                c2 = sn_char(beta, m2)
                if c2 == 0:
                    continue
                total += sign2 * c1 * c2 * coeff
            value = total * cents[ci]
            assert value.denominator == 1, f"non-integer character value at {lam}, {mu}"
            row.append(int(value))
        rows.append(tuple(row))

    table = CharacterTable(
        group="B",
        n=n,
        row_labels=classes,
        col_labels=classes,
        rows=tuple(rows),
        class_sizes=tuple(class_size(mu) for mu in classes),
        order=group_order(n),
    )
    _certify(table)
    return table


def _certify(table: CharacterTable) -> None:
    degrees = table.degrees()
    assert all(d > 0 for d in degrees), "non-positive degree"
    assert sum(d * d for d in degrees) == table.order, "degree-sum identity failed"


def verify_orthogonality(table: CharacterTable) -> list[str]:
    """Row and column orthogonality; returns mismatch descriptions."""
    bad = []
    rows, sizes, order = table.rows, table.class_sizes, table.order
    m = len(rows)
    for i in range(m):
        ri = rows[i]
        for j in range(i, m):
            rj = rows[j]
            dot = sum(s * a * b for s, a, b in zip(sizes, ri, rj))
            expected = order if i == j else 0
            if dot != expected:
                bad.append(f"row orthogonality failed at {i},{j}: {dot} != {expected}")
    for u in range(m):
        for v in range(u, m):
            dot = sum(r[u] * r[v] for r in rows)
            expected = order // sizes[u] if u == v else 0
            if dot != expected:
                bad.append(f"column orthogonality failed at {u},{v}: {dot} != {expected}")
    return bad


# ---------------------------------------------------------------------------
# inner products and multiplicity reports


@dataclass
class MultiplicityReport:
    """Decomposition of a class function over irreducible constituents."""

    group: str
    n: int
    meta: dict = field(default_factory=dict)
    entries: list = field(default_factory=list)  # (label text, multiplicity, note)
    verdict: str = "proper"

    @property
    def negative_witnesses(self) -> list:
        return [(label, m) for label, m, _ in self.entries if m < 0]

    def multiplicity_map(self) -> dict:
        return {label: m for label, m, _ in self.entries}

    def to_json_obj(self) -> dict:
        obj = {"group": self.group, "n": self.n}
        obj.update(self.meta)
        obj["verdict"] = self.verdict
        obj["negative_witnesses"] = [
            {"row": label, "multiplicity": _frac_str(m)} for label, m in self.negative_witnesses
        ]
        obj["multiplicities"] = [
            {"row": label, "multiplicity": _frac_str(m), "note": note}
            for label, m, note in self.entries
        ]
        return obj


def _frac_str(v) -> str:
    if isinstance(v, Fraction) and v.denominator != 1:
        return f"{v.numerator}/{v.denominator}"
    return str(int(v))


def inner_product(f: ClassFunction, row, table: CharacterTable) -> Fraction:
    """(1/|G|) sum over classes of |C| f(mu) row(mu); rows are real-valued here."""
    if f.n != table.n:
        raise ValueError("rank mismatch")
    total = 0
    for size, label, value in zip(table.class_sizes, table.col_labels, row):
        total += size * f.values[label] * value
    return Fraction(total, table.order)


def decompose(f: ClassFunction, table: CharacterTable, expect_integral: bool = True, **meta) -> MultiplicityReport:
    """Full decomposition with reconstruction check and properness verdict."""
    mults = []
    for label, row in zip(table.row_labels, table.rows):
        m = inner_product(f, row, table)
        if expect_integral and m.denominator != 1:
            raise AssertionError(f"non-integral multiplicity {m} at row {label}")
        mults.append(m if m.denominator != 1 else int(m))
    # reconstruction: the decomposition must reproduce f exactly
    for j, label in enumerate(table.col_labels):
        total = sum(m * row[j] for m, row in zip(mults, table.rows))
        assert total == f.values[label], f"reconstruction failed at class {label}"
    report = MultiplicityReport(group=f.group, n=f.n, meta=meta)
    for label, m in zip(table.row_labels, mults):
        report.entries.append((table.encode_row_label(label), m, "irreducible"))
    report.verdict = "proper" if all(m >= 0 for _, m, _ in report.entries) else "not-proper"
    return report


def subgroup_multiplicities(f: ClassFunction, nu: str, **meta) -> MultiplicityReport:
    """Constituent multiplicities of f over the index-2 subgroup ker(nu).

    f must be supported on classes with nu = +1 and constant on full-group
    classes.  For a row chi with chi x nu a different row, the two rows share
    one irreducible restriction of multiplicity m(chi) = m(chi x nu); when
    chi x nu = chi, the restriction splits into two constituents and, since f
    is invariant under full-group conjugation, each carries m(chi)/2.
    """
    if nu not in _NU_SUBGROUP:
        raise ValueError(f"nu must be one of {tuple(_NU_SUBGROUP)}")
    n = f.n
    table = bn_table(n)
    half_order = table.order // 2
    nu_values = tuple(twist_of_class(mu, nu) for mu in table.col_labels)
    support = [
        (j, mu, table.class_sizes[j])
        for j, mu in enumerate(table.col_labels)
        if nu_values[j] == 1
    ]
    for j, mu, _ in support:
        if mu not in f.values:
            raise ValueError(f"f lacks the subgroup class {mu.encode()}")

    row_index = {row: i for i, row in enumerate(table.rows)}
    report = MultiplicityReport(group=f.group, n=n, meta=meta)

    def m_of(i: int) -> Fraction:
        row = table.rows[i]
        total = sum(size * f.values[mu] * row[j] for j, mu, size in support)
        return Fraction(total, half_order)

    seen = set()
    for i, label in enumerate(table.row_labels):
        if i in seen:
            continue
        twisted = tuple(v * s for v, s in zip(table.rows[i], nu_values))
        partner = row_index[twisted]  # tensoring an irreducible stays irreducible
        m = m_of(i)
        if m.denominator != 1:
            raise AssertionError(f"non-integral subgroup multiplicity {m} at {label}")
        m = int(m)
        text = table.encode_row_label(label)
        if partner == i:
            if m % 2 != 0:
                raise AssertionError(f"split row {label} carries odd multiplicity {m}")
            half = m // 2
            report.entries.append((text, half, "split constituent (one of two)"))
            report.entries.append((text, half, "split constituent (two of two)"))
            seen.add(i)
        else:
            m2 = m_of(partner)
            if m2 != m:
                raise AssertionError(
                    f"paired rows {label} / {table.row_labels[partner]} disagree: {m} vs {m2}"
                )
            partner_text = table.encode_row_label(table.row_labels[partner])
            report.entries.append((text, m, f"restriction shared with {partner_text}"))
            seen.add(i)
            seen.add(partner)
    report.verdict = "proper" if all(m >= 0 for _, m, _ in report.entries) else "not-proper"
    return report


def index4_multiplicities(f: ClassFunction, **meta) -> MultiplicityReport:
    """Properness report over the index-4 subgroup (kernel of both characters).

    Rows are grouped into orbits under tensoring by the four linear
    characters.  For an orbit representative chi, M = <f, chi restricted> is
    e*t times the common constituent multiplicity, where the restriction has
    t distinct constituents of multiplicity e with e*e*t = stabilizer size.
    Orbits of size 4 or 2 determine (e, t) = (1, 1) or (1, 2); for a fixed
    row (stabilizer 4) either (1, 4) or (2, 1) can occur, and the entry
    records M/4 with a note - the properness verdict only needs the sign of
    M, which is independent of that choice.
    """
    n = f.n
    table = bn_table(n)
    quarter_order = table.order // 4
    chi_vals = tuple(twist_of_class(mu, "chi") for mu in table.col_labels)
    chiP_vals = tuple(twist_of_class(mu, "chiP") for mu in table.col_labels)
    support = [
        (j, mu, table.class_sizes[j])
        for j, mu in enumerate(table.col_labels)
        if chi_vals[j] == 1 and chiP_vals[j] == 1
    ]
    row_index = {row: i for i, row in enumerate(table.rows)}
    report = MultiplicityReport(group=f.group, n=n, meta=meta)
    seen = set()
    for i, label in enumerate(table.row_labels):
        if i in seen:
            continue
        orbit = set()
        for sv, pv in ((1, 1), (-1, 1), (1, -1), (-1, -1)):
            twisted = tuple(
                v * (sv if cs == -1 else 1) * (pv if cp == -1 else 1)
                for v, cs, cp in zip(table.rows[i], chi_vals, chiP_vals)
            )
            orbit.add(row_index[twisted])
        seen |= orbit
        total = sum(size * f.values[mu] * table.rows[i][j] for j, mu, size in support)
        m_orbit = Fraction(total, quarter_order)
        if m_orbit.denominator != 1:
            raise AssertionError(f"non-integral orbit inner product {m_orbit} at {label}")
        m_orbit = int(m_orbit)
        text = table.encode_row_label(label)
        size = len(orbit)
        if size == 4:
            report.entries.append((text, m_orbit, "irreducible restriction (orbit of 4 rows)"))
        elif size == 2:
            if m_orbit % 2 != 0:
                raise AssertionError(f"two-constituent orbit at {label} carries odd value {m_orbit}")
            report.entries.append((text, m_orbit // 2, "split constituent x2 (orbit of 2 rows)"))
            report.entries.append((text, m_orbit // 2, "split constituent x2 (orbit of 2 rows)"))
        else:
            if m_orbit % 2 != 0:
                raise AssertionError(f"stable row {label} carries odd value {m_orbit}")
            report.entries.append(
                (text, Fraction(m_orbit, 4), "stable row: constituent value M/4 or M/2, sign exact")
            )
    report.verdict = "proper" if all(m >= 0 for _, m, _ in report.entries) else "not-proper"
    return report


# ---------------------------------------------------------------------------
# named checks


def fs_mismatches(n: int) -> list[str]:
    """Row sum of the table against the square-root count, plus all-ones check."""
    from .rootcount import root_enumerator

    table = bn_table(n)
    r2 = root_enumerator(n, 2)
    bad = []
    for j, mu in enumerate(table.col_labels):
        total = sum(row[j] for row in table.rows)
        if total != r2.values[mu]:
            bad.append(f"n={n} class={mu.encode()}: row sum {total} != {r2.values[mu]}")
    report = decompose(r2, table, k=2)
    for label, m, _ in report.entries:
        if m != 1:
            bad.append(f"n={n} row={label}: square-root multiplicity {m} != 1")
    return bad


def gelfand_check_B(n: int) -> bool:
    """Involution higher-Lie sum contains every irreducible exactly once."""
    from .hlc import psi_k_sum

    f = psi_k_sum(n, 2)
    report = decompose(f, bn_table(n), k=2)
    return all(m == 1 for _, m, _ in report.entries)


def gelfand_check_D(n: int) -> bool:
    """The rank-n rotation subgroup double model: every constituent twice."""
    from .hlc import psi_k_sum, spsi_k_sum
    from .group import class_chi

    plus = psi_k_sum(n, 2)
    minus = spsi_k_sum(n, 2)
    values = {
        mu: plus.values[mu] + minus.values[mu]
        for mu in bipartitions(n)
        if class_chi(mu) == 1
    }
    f = ClassFunction("D", n, values)
    report = subgroup_multiplicities(f, "chi", k=2)
    return all(m == 2 for _, m, _ in report.entries)


def properness_sweep(group: str, n: int, k_set, **meta) -> list[MultiplicityReport]:
    """Multiplicity reports for the k-th root enumerators of the named group."""
    from .rootcount import root_enumerator, subgroup_root_enumerator

    reports = []
    for k in k_set:
        if group == "B":
            rep = decompose(root_enumerator(n, k), bn_table(n), k=k, **meta)
        elif group in ("D", "Z2A", "AB"):
            nu = {"D": "chi", "Z2A": "chiP", "AB": "chichiP"}[group]
            rep = subgroup_multiplicities(subgroup_root_enumerator(n, k, group), nu, k=k, **meta)
        elif group == "AD":
            rep = index4_multiplicities(subgroup_root_enumerator(n, k, "AD"), k=k, **meta)
        else:
            raise ValueError(f"no properness sweep for group {group!r}")
        reports.append(rep)
    return reports
