"""Command line front end.

Every command emits a single report (JSON by default, CSV on request)
that embeds the library version and the full run configuration, so a
report can be reproduced byte for byte from its own header.  Exit codes:
0 success, 1 verification failure, 2 usage error, 3 capability exceeded.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import __version__
from .approx import approx_construct, check_approx, third_layer_check
from .constructions import best_bounds, build_construction
from .cube import MASK_CAP, VertexSet
from .errors import CapabilityError, CertificateError, DomainError
from .exhaustive import exhaustive_lambda
from .hadamard import hadamard_matrix
from .johnson import EXPLICIT_VERTEX_CAP, hadamard_to_clique, omega, verify_clique
from .residues import verify_prop31, verify_thm32
from .stats import distribution, distribution_fast

VERIFY_SUITES = (
    "prop31",
    "thm32",
    "approx",
    "third-layer",
    "clique-certs",
    "oracle-equivalence",
)

_CHECKED_DIMENSION_CAP = 10_000  # skip the d_min self-check above this


@dataclass(frozen=True)
class RunConfig:
    """Everything needed to reproduce a run, embedded in each report."""

    command: str
    parameters: dict
    seed: int = 0
    format: str = "json"
    out: str | None = None
    workers: int = 1
    max_n: int = MASK_CAP
    max_clique_s: int = EXPLICIT_VERTEX_CAP
    opt_in_n5: bool = False

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "parameters": dict(sorted(self.parameters.items())),
            "seed": self.seed,
            "format": self.format,
            "out": self.out,
            "workers": self.workers,
            "max_n": self.max_n,
            "max_clique_s": self.max_clique_s,
            "opt_in_n5": self.opt_in_n5,
        }


def _envelope(config: RunConfig, payload: dict, provenance: Sequence[str] = ()) -> dict:
    return {
        "version": __version__,
        "config": config.to_json(),
        "provenance": sorted(provenance),
        **payload,
    }


def _load_json_arg(text: str) -> dict:
    """Parse an inline JSON object, or @path to read it from a file."""
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            text = fh.read()
    obj = json.loads(text)
    if not isinstance(obj, dict):
        raise DomainError("expected a JSON object")
    return obj


# ---------------------------------------------------------------------------
# commands: each returns (payload, csv rows, provenance tags, passed flag)
# ---------------------------------------------------------------------------


def cmd_dist(config: RunConfig, args: argparse.Namespace):
    provenance: list[str] = []
    payload: dict = {}
    if (args.set_file is None) == (args.construct is None):
        raise DomainError("give exactly one of --set-file and --construct")
    if args.set_file is not None:
        with open(args.set_file, "r", encoding="utf-8") as fh:
            A = VertexSet.from_json(json.load(fh))
    else:
        spec = _load_json_arg(args.construct)
        if spec.get("kind") == "bernoulli":
            spec.setdefault("seed", config.seed)
        result = build_construction(spec)
        payload["construction"] = result.to_json()
        A = result.vertex_set
    if A.n > config.max_n:
        raise CapabilityError(f"set lives in n={A.n}, above the cap {config.max_n}")
    dist = distribution_fast(A, args.d)
    payload["distribution"] = dist.to_json()
    rows = [["s", "count"]]
    rows += [[str(s), str(c)] for s, c in enumerate(dist.counts) if c]
    if args.s is not None:
        value = dist.fraction(args.s)
        payload["lambda"] = {"s": args.s, "value": str(value)}
        rows.append(["lambda(s=%d)" % args.s, str(value)])
    return payload, rows, provenance, True


def cmd_exhaustive(config: RunConfig, args: argparse.Namespace):
    value, witness = exhaustive_lambda(
        args.n, args.d, args.s, opt_in_n5=config.opt_in_n5
    )
    payload = {
        "n": args.n,
        "d": args.d,
        "s": args.s,
        "lambda": str(value),
        "witness": witness.to_json(),
    }
    rows = [
        ["n", "d", "s", "lambda", "witness_vertices"],
        [
            str(args.n),
            str(args.d),
            str(args.s),
            str(value),
            " ".join(str(v) for v in witness.vertices()),
        ],
    ]
    return payload, rows, [], True


def cmd_bounds(config: RunConfig, args: argparse.Namespace):
    bounds = best_bounds(args.d, args.s)
    provenance = []
    if bounds.upper_source == "reference-constant":
        provenance.append(f"reference-constant:upper({args.d},{args.s})")
    payload = {"bounds": bounds.to_json()}
    rows = [
        ["d", "s", "lower", "upper", "lower_witness", "upper_source"],
        [
            str(args.d),
            str(args.s),
            str(bounds.lower),
            str(bounds.upper),
            bounds.lower_witness,
            bounds.upper_source,
        ],
    ]
    return payload, rows, provenance, True


def cmd_omega(config: RunConfig, args: argparse.Namespace):
    result = omega(args.s, policy=args.policy, time_budget=args.time_budget)
    payload = {"omega": result.to_json()}
    rows = [
        ["s", "lower", "upper", "exact", "source"],
        [
            str(result.s),
            str(result.lower),
            str(result.upper),
            str(result.exact).lower(),
            result.source,
        ],
    ]
    return payload, rows, [], True


def cmd_clique(config: RunConfig, args: argparse.Namespace):
    result = omega(args.s, policy=args.policy, time_budget=args.time_budget)
    cert = result.certificate
    payload = {"certificate": cert.to_json(), "size": cert.size()}
    rows = [["member"]]
    rows += [[" ".join(str(e) for e in sorted(member))] for member in cert.to_json()["members"]]
    return payload, rows, [], True


def cmd_construct(config: RunConfig, args: argparse.Namespace):
    spec = _load_json_arg(args.spec)
    if spec.get("kind") == "bernoulli":
        spec.setdefault("seed", config.seed)
    result = build_construction(spec)
    payload = {"construction": result.to_json()}
    rows = [["vertex"]] + [[str(v)] for v in result.vertex_set.vertices()]
    return payload, rows, [], True


def cmd_approx(config: RunConfig, args: argparse.Namespace):
    spec = approx_construct(args.x, args.eps)
    payload = {"spec": spec.to_json()}
    check_d = args.check_d
    if check_d is None and spec.d_min <= _CHECKED_DIMENSION_CAP:
        check_d = spec.d_min
    check = check_approx(spec, check_d) if check_d is not None else None
    if check is not None:
        payload["check"] = {"d": check_d, **check.to_json()}
    rows = [
        ["x", "q", "p", "P", "d_min", "tol", "check_d", "max_error", "bound_ok"],
        [
            str(spec.x),
            str(spec.q),
            str(spec.p),
            " ".join(str(r) for r in spec.P),
            str(spec.d_min),
            str(spec.tol),
            "" if check_d is None else str(check_d),
            "" if check is None else str(check.max_error),
            "" if check is None else str(check.bound_ok).lower(),
        ],
    ]
    passed = check is None or check.bound_ok
    return payload, rows, [], passed


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------


def _suite_prop31(config: RunConfig) -> list[dict]:
    checks = []
    for d in range(3, 17):
        ok = all(verify_prop31(k, d) for k in range(3, d + 1))
        checks.append({"name": f"prop31 d={d} (all 2<k<=d)", "pass": ok})
    return checks


def _suite_thm32(config: RunConfig) -> list[dict]:
    checks = []
    for k in range(1, 9):
        report = verify_thm32(k, range(1, 17), workers=config.workers)
        checks.append(
            {
                "name": f"thm32 k={k} d<=16",
                "pass": report.ok,
                "violations": [case.to_json() for case in report.violations],
            }
        )
    return checks


def _suite_approx(config: RunConfig) -> list[dict]:
    from .approx import ApproxSpec

    checks = []
    for q in range(2, 13):
        worst_ok = True
        for p in range(1, q):
            spec = ApproxSpec(x=p / q, q=q, P=tuple(range(p)), d_min=1, tol=1.0)
            for d in range(1, 65):
                if not check_approx(spec, d).bound_ok:
                    worst_ok = False
        checks.append({"name": f"bound holds q={q}, p<q, d<=64", "pass": worst_ok})
    return checks


def _suite_third_layer(config: RunConfig) -> list[dict]:
    return [{"name": "third layer floor/ceil d<=30", "pass": third_layer_check(30)}]


def _suite_clique_certs(config: RunConfig) -> list[dict]:
    checks = []
    for order in (4, 8, 12, 16, 20, 24, 32):
        H = hadamard_matrix(order)
        if H is None:
            checks.append({"name": f"order {order}", "pass": False})
            continue
        cert = hadamard_to_clique(H)
        try:
            verify_clique(cert)
            ok = cert.size() == order - 1
        except CertificateError:
            ok = False
        checks.append({"name": f"order {order} clique of size {order - 1}", "pass": ok})
    return checks


def _suite_oracle_equivalence(config: RunConfig) -> list[dict]:
    rng = np.random.default_rng(config.seed)
    checks = []
    ok = True
    sym_ok = True
    for _ in range(25):
        n = int(rng.integers(1, 8))
        d = int(rng.integers(0, n + 1))
        bits = rng.integers(0, 2, size=1 << n)
        A = VertexSet.from_vertices(n, [v for v in range(1 << n) if bits[v]])
        fast = distribution_fast(A, d)
        slow = distribution(A, d)
        if fast != slow:
            ok = False
        comp = distribution_fast(A.complement(), d)
        if fast.counts != comp.counts[::-1]:
            sym_ok = False
    checks.append({"name": "distribution_fast == distribution (25 seeded sets)", "pass": ok})
    checks.append({"name": "complement mirrors counts", "pass": sym_ok})
    return checks


_SUITES = {
    "prop31": _suite_prop31,
    "thm32": _suite_thm32,
    "approx": _suite_approx,
    "third-layer": _suite_third_layer,
    "clique-certs": _suite_clique_certs,
    "oracle-equivalence": _suite_oracle_equivalence,
}


def cmd_verify(config: RunConfig, args: argparse.Namespace):
    checks = _SUITES[args.suite](config)
    passed = all(c["pass"] for c in checks)
    payload = {"suite": args.suite, "pass": passed, "checks": checks}
    rows = [["check", "pass"]]
    rows += [[c["name"], str(c["pass"]).lower()] for c in checks]
    return payload, rows, [], passed


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--seed", type=int, default=0, help="64-bit seed (default 0)")
    shared.add_argument("--format", choices=("json", "csv"), default="json")
    shared.add_argument("--out", default=None, help="write the report to this path")
    shared.add_argument("--workers", type=int, default=1)
    shared.add_argument("--max-n", type=int, default=MASK_CAP, dest="max_n")
    shared.add_argument(
        "--opt-in-n5",
        action="store_true",
        dest="opt_in_n5",
        help="allow the minutes-long n=5 exhaustive search",
    )

    parser = argparse.ArgumentParser(
        prog="cubestats",
        description="Exact subcube statistics of vertex sets in hypercubes.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", parents=[shared], help="subcube count distribution of a set")
    p.add_argument("--set-file", dest="set_file", default=None)
    p.add_argument("--construct", default=None, help="construction spec JSON (or @file)")
    p.add_argument("-d", type=int, required=True, dest="d")
    p.add_argument("-s", type=int, default=None, dest="s")

    p = sub.add_parser("exhaustive", parents=[shared], help="exact max over all sets")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("s", type=int)

    p = sub.add_parser("bounds", parents=[shared], help="best proven enclosure of the limit")
    p.add_argument("d", type=int)
    p.add_argument("s", type=int)

    for name, help_text in (
        ("omega", "clique number of the intersection graph"),
        ("clique", "emit a maximum clique certificate"),
    ):
        p = sub.add_parser(name, parents=[shared], help=help_text)
        p.add_argument("s", type=int)
        p.add_argument("--policy", choices=("auto", "hadamard", "search"), default="auto")
        p.add_argument("--time-budget", type=float, default=None, dest="time_budget")

    p = sub.add_parser("construct", parents=[shared], help="materialize a construction")
    p.add_argument("spec", help="construction spec JSON (or @file)")

    p = sub.add_parser("verify", parents=[shared], help="run a verification suite")
    p.add_argument("suite", choices=VERIFY_SUITES)

    p = sub.add_parser("approx", parents=[shared], help="density approximation spec")
    p.add_argument("x", type=float)
    p.add_argument("eps", type=float)
    p.add_argument("--check-d", type=int, default=None, dest="check_d")

    return parser


_COMMANDS = {
    "dist": cmd_dist,
    "exhaustive": cmd_exhaustive,
    "bounds": cmd_bounds,
    "omega": cmd_omega,
    "clique": cmd_clique,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "approx": cmd_approx,
}

_CONFIG_FIELDS = ("seed", "format", "out", "workers", "max_n", "opt_in_n5")


def _render_csv(rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _emit(config: RunConfig, text: str) -> None:
    if config.out is None:
        sys.stdout.write(text)
    else:
        with open(config.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    parameters = {
        k: v
        for k, v in vars(args).items()
        if k not in _CONFIG_FIELDS and k != "command" and v is not None
    }
    config = RunConfig(
        command=args.command,
        parameters=parameters,
        seed=args.seed,
        format=args.format,
        out=args.out,
        workers=args.workers,
        max_n=args.max_n,
        opt_in_n5=args.opt_in_n5,
    )
    if not 0 <= config.seed < 1 << 64:
        print("cubestats: seed must fit in 64 bits", file=sys.stderr)
        return 2
    try:
        payload, rows, provenance, passed = _COMMANDS[args.command](config, args)
    except (DomainError, CertificateError, json.JSONDecodeError, OSError) as exc:
        print(f"cubestats: {exc}", file=sys.stderr)
        return 2
    except CapabilityError as exc:
        print(f"cubestats: {exc}", file=sys.stderr)
        return 3
    if config.format == "csv":
        text = _render_csv(rows)
    else:
        report = _envelope(config, payload, provenance)
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    _emit(config, text)
    return 0 if passed else 1


if __name__ == "__main__":
    sys.exit(main())
