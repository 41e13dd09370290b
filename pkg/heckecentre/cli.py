# -*- coding: utf-8 -*-
"""
Command line interface.

    heckecentre basis --n 4 --format text
    heckecentre matrix --k 3 --which N --format json
    heckecentre verify --n 4
    heckecentre s3-table --max-size 7 --format csv
    heckecentre s3-enumerate --bound 20
    heckecentre check-set --n 3 0 1 1,1

Exit status: 0 on success, 1 when a verification fails (or a checked set is
not an integral basis), 2 on invalid arguments, 3 when a resource cap is hit.
"""

import sys
import argparse
from dataclasses import dataclass, field

from heckecentre import settings
from heckecentre.combinat import parse_composition
from heckecentre.centre import basis, expand_in_gamma, check_monomial_set, monomial_transition
from heckecentre.io import MatrixCache, get_format, write_output
from heckecentre.matrix import NotUnimodular
from heckecentre.qsym import a_matrix
from heckecentre.tower import z_matrix, xi_matrix, upsilon_matrix, k_matrix, t_matrix, m_matrix, n_matrix, \
                              m_matrix_direct, x_matrix, y_matrix, UnresolvedHatConvention, \
                              resolve_hat_convention
from heckecentre.utils import RankTooLarge, MAX_BASIS_RANK, MAX_MATRIX_K, guard
from heckecentre.verify import run_suite
from heckecentre import s3


@dataclass
class CliConfig:
    command: str
    n: int = None
    k: int = None
    which: str = "M"
    bound: int = 20
    max_size: int = 7
    route: str = "direct"
    format: str = "text"
    output: str = None
    cache_dir: str = None
    threads: int = None
    progress: bool = False
    monomials: list = field(default_factory=list)


######## matrix export

def _hat(k):
    return t_matrix(k, resolve_hat_convention(k))

def _matrices(config):
    route = config.route
    cache = MatrixCache(config.cache_dir) if config.cache_dir else None
    def cached(which, compute):
        return lambda k: cache.get(which, k, route, lambda: compute(k)) if cache else compute(k)
    return {"A": a_matrix,
            "Atower": lambda k: a_matrix(k, include_empty=True),
            "Z": z_matrix,
            "Xi": xi_matrix,
            "Upsilon": upsilon_matrix,
            "K": k_matrix,
            "X": x_matrix,
            "Y": y_matrix,
            "T": _hat,
            "M": cached("M", lambda k: m_matrix(k, route)),
            "N": cached("N", lambda k: n_matrix(k, route)),
            "Mdirect": m_matrix_direct}

MATRIX_NAMES = ("A", "Atower", "Z", "Xi", "Upsilon", "K", "X", "Y", "T", "M", "N", "Mdirect")


######## commands

def _basis(config, fmt):
    guard(config.n, MAX_BASIS_RANK, "rank")
    matrices = MatrixCache(config.cache_dir).n_matrices(config.route) if config.cache_dir else None
    elements = basis(config.n, config.route, matrices)
    gammas = [expand_in_gamma(e) for e in elements]
    return fmt.basis(config.n, elements, gammas), 0

def _matrix(config, fmt):
    guard(config.k, MAX_MATRIX_K, "k")
    if config.k < 1 and config.which not in ("M", "N", "Mdirect"):
        raise ValueError("{} is defined for k ≥ 1.".format(config.which))
    return fmt.matrix(_matrices(config)[config.which](config.k)), 0

def _verify(config, fmt):
    guard(config.n, MAX_BASIS_RANK, "rank")
    results = run_suite(config.n, config.route)
    return fmt.report(results), 0 if all(results.values()) else 1

def _s3_table(config, fmt):
    return fmt.table(s3.coefficient_table(config.max_size)), 0

def _s3_enumerate(config, fmt):
    bases = s3.enumerate_zs3_bases(config.bound)
    report = {"bound": config.bound,
              "bases found": len(bases),
              "bases": bases,
              "exactly four": len(bases) == 4, # a bounded claim: only |μ| ≤ bound was searched
              "spanning Γ_{2,1}": s3.gamma21_spanners(config.bound),
              "Γ_3 coefficient ±1": s3.gamma3_unit_monomials(config.bound),
              "basis of Z(H_3)": s3.h3_unique_basis()}
    return fmt.report(report), 0

def _check_set(config, fmt):
    guard(config.n, MAX_BASIS_RANK, "rank")
    monomials = [parse_composition(text) for text in config.monomials]
    for mu in monomials:
        if not mu.is_partition:
            raise ValueError("m_{{{}}} is not indexed by a partition.".format(mu))
    is_basis = check_monomial_set(monomials, config.n)
    report = {"n": config.n,
              "monomials": sorted(set(monomials)),
              "determinant": monomial_transition(monomials, config.n).det(),
              "integral basis": is_basis}
    return fmt.report(report), 0 if is_basis else 1

_commands = {"basis": _basis, "matrix": _matrix, "verify": _verify, "s3-table": _s3_table,
             "s3-enumerate": _s3_enumerate, "check-set": _check_set}


def run(config, stream=None):
    """ Runs one command; returns the exit status. """
    settings.show_progress = config.progress
    settings.max_workers = config.threads
    try:
        fmt = get_format(config.format)
        text, status = _commands[config.command](config, fmt)
    except RankTooLarge as e:
        print("heckecentre: {}".format(e), file=sys.stderr)
        return 3
    except (ValueError, NotImplementedError) as e:
        print("heckecentre: {}".format(e), file=sys.stderr)
        return 2
    except (UnresolvedHatConvention, NotUnimodular) as e:
        print("heckecentre: {}".format(e), file=sys.stderr)
        return 1
    write_output(text, config.output, stream)
    return status


######## argument parsing

def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer, got {}".format(value))
    return value

def _natural(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("expected a non-negative integer, got {}".format(value))
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="heckecentre",
        description="integral bases of the centre of the Iwahori-Hecke algebra of type A",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "csv"), default="text")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--progress", action="store_true", help="show progress bars (needs tqdm)")
    common.add_argument("--threads", type=_positive, help="worker processes for the direct oracle")
    common.add_argument("--cache-dir", help="folder for cached N^(k) matrices")
    common.add_argument("--route", choices=("direct", "tower"), default="direct",
                        help="how M^(k) and N^(k) are obtained")

    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("basis", parents=[common], help="the basis M_λ of Z(H_n)")
    p.add_argument("--n", type=_positive, required=True)

    p = commands.add_parser("matrix", parents=[common], help="one of the matrices of level k")
    p.add_argument("--k", type=_natural, required=True)
    p.add_argument("--which", choices=MATRIX_NAMES, default="M",
                   help="Atower is A with the identity added on equal sizes, as used by the tower")

    p = commands.add_parser("verify", parents=[common], help="run the invariant suite in rank n")
    p.add_argument("--n", type=_positive, required=True)

    p = commands.add_parser("s3-table", parents=[common], help="class-sum coefficients of monomials in ZS_3")
    p.add_argument("--max-size", type=_natural, default=7)

    p = commands.add_parser("s3-enumerate", parents=[common], help="monomial bases of Z(ZS_3)")
    p.add_argument("--bound", type=_positive, default=20)

    p = commands.add_parser("check-set", parents=[common],
                            help="is a set of monomials an integral basis of Z(H_n)?")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("monomials", nargs="+", help='partitions, e.g. 0 1 2 "1,1"')

    return parser


def parse_config(argv=None):
    args = build_parser().parse_args(argv)
    return CliConfig(**{key.replace("-", "_"): value for key, value in vars(args).items()})


def main(argv=None):
    return run(parse_config(argv))


if __name__ == "__main__":
    sys.exit(main())
