# Copyright (C) 2026 The curvelotus authors
#
# You can copy, redistribute or modify this Program under the terms of
# the GNU General Public License version 2 as published by the Free
# Software Foundation.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# version 2 along with this program; if not, write to the Free Software
# Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston, MA
# 02110-1301, USA.

import argparse
import logging
import os
import sys

from curvelotus.config.defaults import AUX_STRATEGIES, DEFAULT_AUX_STRATEGY, DEFAULT_EMIT, VERSION
from curvelotus.core.errors import DomainError, InvariantViolation, ParseError
from curvelotus.ctl import loghandler
from curvelotus.ctl.commands import COMMANDS
from curvelotus.ctl.curvefile import load_curve_file
from curvelotus.ctl.report import render
from curvelotus.ctl.specs import argsd

logger = logging.getLogger("curvelotus")

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_DOMAIN = 2
EXIT_INVARIANT = 3


def init_logger():
    """ Initialize logging, use colour if on a tty. """
    if os.isatty(sys.stderr.fileno()):
        root = logging.getLogger()
        root.setLevel(level=logging.INFO)
        root.addHandler(loghandler.ColourLogHandler())
    else:
        logging.basicConfig(
            level=logging.INFO,
            format="%(asctime)s - <%(levelname)s> - %(message)s")


def set_logger_level(args):
    if args.verbose:
        logger.setLevel(logging.DEBUG)
    if args.quiet:
        logger.setLevel(logging.WARNING)


def register_args(parser, name, entry):
    parser.add_argument(
        "--emit", choices=entry["emit"], default=DEFAULT_EMIT,
        help="output format (default: %s)" % DEFAULT_EMIT)
    parser.add_argument(
        "--aux-strategy", choices=AUX_STRATEGIES, default=DEFAULT_AUX_STRATEGY,
        help="choice of the auxiliary smooth branches")
    parser.add_argument(
        "-v", "--verbose", action="store_true", default=False,
        help="increase verbosity")
    parser.add_argument(
        "-q", "--quiet", action="store_true", default=False,
        help="be quiet, log warnings and errors only")
    for arg in entry["args"]:
        if "val" in arg:
            parser.add_argument("--%s" % arg["name"], action="store_const", const=arg["val"],
                                default=None, help=arg.get("help"))
        else:
            parser.add_argument(arg["name"], help=arg.get("help"))
    parser.set_defaults(command=name, func=COMMANDS[name])


def build_parser():
    parser = argparse.ArgumentParser(
        prog="curvelotus",
        description="Combinatorics of embedded resolutions of plane curve singularities")
    parser.add_argument("--version", action="version", version="%(prog)s " + VERSION)
    subparsers = parser.add_subparsers(help="sub-command help")
    for name, entry in argsd.items():
        register_args(subparsers.add_parser(name, help=entry["help"]), name, entry)
    return parser


def run(argv=None, stdout=None):
    """Run one command and return its exit code."""
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        func = args.func
    except AttributeError:
        parser.error("too few arguments")
    set_logger_level(args)
    try:
        curve = load_curve_file(args.curve)
        report = func(args, curve)
        output = render(report, args.emit)
    except ParseError as err:
        logger.error("parse error: %s", err)
        return EXIT_PARSE
    except DomainError as err:
        logger.error("domain error: %s", err)
        return EXIT_DOMAIN
    except InvariantViolation as err:
        logger.error("invariant violation: %s", err)
        return EXIT_INVARIANT
    except Exception as err:
        logger.error("internal error: %s: %s", type(err).__name__, err)
        logger.debug("traceback", exc_info=True)
        return EXIT_INVARIANT
    stdout.write(output)
    return EXIT_OK


def main():
    init_logger()
    return run()
