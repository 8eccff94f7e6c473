"""Command-line interface: ``pmlab check|gen|ideals|decompose|localize|verify``.

Exit codes: 0 when everything passes, 1 on any failure, 2 on usage or
parse errors.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .core import FinitePseudoring, build_chain_monoid_ring, build_product, build_sub, build_zero_mul, build_zmod, check_axioms
from .corpus import corpus, corpus_ring, random_documents
from .errors import AlgSyntaxError, AxiomViolation, NotPrime, NotPseudomeadow, PmlabError
from .fileformat import AlgebraDocument, parse_algebra, serialize_algebra
from .idempotents import decompose
from .ideals import enumerate_ideals, is_maximal, is_prime, radicals
from .quotients import localize, verify_localization_theorem
from .regularity import vn_profile
from .verify import verify_all


def _die(msg: str, code: int = 2):
    click.echo(f"error: {msg}", err=True)
    sys.exit(code)


def _load(path: str, check: bool = True) -> AlgebraDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        _die(str(exc))
    try:
        return parse_algebra(text, check=check)
    except AlgSyntaxError as exc:
        _die(f"{path}: {exc}")
    except AxiomViolation as exc:
        _die(f"{path}: {exc}")


def _ring(path: str) -> FinitePseudoring:
    return _load(path).to_ring()


def _fmt(R: FinitePseudoring, xs) -> str:
    return "{" + ", ".join(R.label(x) for x in xs) + "}"


def _spec_ring(spec: str) -> FinitePseudoring:
    """A factor given as a file path or ``zmod:N``, ``zeromul:N``, ``chainring:K``, ``corpus:NAME``."""
    kind, _, arg = spec.partition(":")
    try:
        if kind == "zmod" and arg:
            return build_zmod(int(arg))
        if kind == "zeromul" and arg:
            return build_zero_mul(int(arg))
        if kind == "chainring" and arg:
            return build_chain_monoid_ring(int(arg))
        if kind == "corpus" and arg:
            return corpus_ring(arg)
    except (ValueError, KeyError) as exc:
        _die(f"bad algebra spec {spec!r}: {exc}")
    if Path(spec).exists():
        return _ring(spec)
    _die(f"bad algebra spec {spec!r}")


@click.group()
def main() -> None:
    """Finite commutative pseudorings: axioms, ideals, decomposition, localization."""


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
def check(file: str) -> None:
    """Report axioms (1)-(8) and the identity element."""
    doc = _load(file, check=False)
    report = check_axioms((doc.add, doc.mul))
    click.echo(f"pseudoring {doc.name} (order {doc.order})")
    for line in report.lines():
        click.echo(line)
    sys.exit(0 if report.ok else 1)


@main.command()
@click.argument("kind", type=click.Choice(["zmod", "zeromul", "chainring", "product", "sub"]))
@click.argument("args", nargs=-1)
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Write to a file instead of stdout.")
@click.option("--name", help="Override the algebra name.")
def gen(kind: str, args: tuple[str, ...], output: str | None, name: str | None) -> None:
    """Build an algebra and print it in .alg format.

    \b
    pmlab gen zmod 6
    pmlab gen zeromul 6
    pmlab gen chainring 3
    pmlab gen product zmod:2 zmod:3 [FILE ...]
    pmlab gen sub zmod:8 2
    """
    try:
        if kind in ("zmod", "zeromul", "chainring"):
            if len(args) != 1 or not args[0].isdigit():
                _die(f"{kind} takes one non-negative integer argument")
            builder = {"zmod": build_zmod, "zeromul": build_zero_mul, "chainring": build_chain_monoid_ring}[kind]
            R = builder(int(args[0]))
        elif kind == "product":
            R = build_product([_spec_ring(a) for a in args])
        else:
            if not args:
                _die("sub takes an algebra spec followed by generator indices")
            base = _spec_ring(args[0])
            try:
                gens = [int(g) for g in args[1:]]
            except ValueError:
                _die("generators must be element indices")
            R = build_sub(base, gens).ring
    except PmlabError as exc:
        _die(str(exc))
    if name:
        R = R.renamed(name)
    text = serialize_algebra(AlgebraDocument.from_ring(R, f"pmlab gen {kind} {' '.join(args)}".strip()))
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--prime", "only_prime", is_flag=True, help="Show prime ideals only.")
@click.option("--maximal", "only_maximal", is_flag=True, help="Show maximal ideals only.")
@click.option("--radicals", "show_radicals", is_flag=True, help="Show nil and Jacobson radicals.")
def ideals(file: str, only_prime: bool, only_maximal: bool, show_radicals: bool) -> None:
    """List the ideals of an algebra."""
    R = _ring(file)
    try:
        all_ideals = enumerate_ideals(R)
    except PmlabError as exc:
        _die(str(exc), 1)
    for I in all_ideals:
        p, m = is_prime(R, I), is_maximal(R, I)
        if (only_prime or only_maximal) and not ((only_prime and p) or (only_maximal and m)):
            continue
        tags = [t for t, on in (("prime", p), ("maximal", m)) if on]
        click.echo(f"{_fmt(R, I.members)}" + (f"  [{', '.join(tags)}]" if tags else ""))
    if show_radicals:
        spec = radicals(R)
        click.echo(f"nil radical: {_fmt(R, spec.nil_radical.members)}")
        click.echo(f"jacobson radical: {_fmt(R, spec.jacobson_radical.members)}")
        click.echo(f"Spec = MaxSpec: {spec.spec_equals_maxspec}")


@main.command(name="decompose")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
def decompose_cmd(file: str) -> None:
    """Split a finite pseudomeadow into a product of fields."""
    R = _ring(file)
    try:
        dec = decompose(R)
    except NotPseudomeadow as exc:
        click.echo(f"not decomposable: {exc}")
        sys.exit(1)
    click.echo(f"minimal idempotents: {_fmt(R, dec.minimal)}")
    click.echo(f"identity: {R.label(dec.identity)}")
    for c in dec.components:
        click.echo(f"  field {_fmt(R, c.inclusion)} of order {c.ring.order}, identity {R.label(c.idempotent)}")
    for x in R.elements:
        click.echo(f"h({R.label(x)}) = ({', '.join(R.label(p) for p in dec.h(x))})")


@main.command(name="localize")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--ideal", "ideal_text", required=True, help="Comma-separated element indices of a prime ideal.")
def localize_cmd(file: str, ideal_text: str) -> None:
    """Localize at a prime ideal; for maximal ideals of pseudomeadows, check the theorem."""
    R = _ring(file)
    try:
        members = sorted({int(t) for t in ideal_text.split(",") if t.strip()} | {0})
    except ValueError:
        _die(f"bad ideal {ideal_text!r}")
    try:
        L = localize(R, members)
    except NotPrime as exc:
        click.echo(f"cannot localize: {exc}")
        sys.exit(1)
    except PmlabError as exc:
        _die(str(exc), 1)
    click.echo(f"localization {L.ring.name}: {L.ring.order} classes")
    for c in L.ring.elements:
        click.echo(f"  {L.ring.label(c)}: {len(L.classes[c])} fractions")
    click.echo(f"identity: {L.ring.label(L.identity)}")
    click.echo("canonical map: " + ", ".join(f"{R.label(x)}->{L.ring.label(L.canonical[x])}" for x in R.elements))
    if vn_profile(R).is_pseudomeadow and is_maximal(R, L.prime):
        v = verify_localization_theorem(R, L.prime)
        click.echo(f"field: {v.is_field}; m_m = 0: {v.m_m_is_zero}; surjective: {v.f_surjective}")
        click.echo(f"kernel: {_fmt(R, sorted(v.kernel))}; quotient isomorphism: {v.quotient_iso_ok}")
        click.echo(f"preimage of identity: {_fmt(R, sorted(v.preimage_of_identity))}")
        click.echo(f"e(s) for s outside m: {_fmt(R, sorted(v.denominator_idempotents))}")
        click.echo(f"e(s1) - e(s2) in m: {v.e_difference_ok}")
        sys.exit(0 if v.all_ok else 1)


@main.command(name="verify")
@click.argument("file", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--corpus", "use_corpus", is_flag=True, help="Verify the built-in corpus.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--random", "n_random", type=int, default=0, help="Also verify this many random algebras.")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON instead of text.")
@click.option("--timings", is_flag=True, help="Include per-check runtimes (not deterministic).")
def verify_cmd(file: str | None, use_corpus: bool, seed: int, n_random: int, as_json: bool, timings: bool) -> None:
    """Run every property check and report pass/fail per algebra."""
    docs: list = []
    if file:
        docs.append(_load(file, check=False))
    if use_corpus:
        docs.extend(corpus())
    if n_random:
        docs.extend(random_documents(seed, n_random))
    if not docs:
        _die("nothing to verify: give a FILE, --corpus or --random K")
    report = verify_all(docs)
    click.echo(report.to_json(timings) if as_json else report.to_text(timings), nl=False)
    sys.exit(0 if report.ok else 1)


if __name__ == "__main__":
    main()
