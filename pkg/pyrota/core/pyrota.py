# SPDX-License-Identifier: Apache-2.0

import sys
import getopt

import pyrota.serde as serde
import pyrota.core.constants as constants

from pyrota.core.errors import UsageError
from pyrota.core.config import Config
from pyrota.core.session import Session
from pyrota.core.register import CheckRegister
from pyrota.core.engine import CheckEngine
from pyrota.logger import FileLogger
from pyrota.algebra.tensor import TensorElement
from pyrota.dsl.evaluator import Evaluator
from pyrota.operators.spitzer import spitzer_verify
from pyrota.bialgebra.primitives import primitives_at_bound
from pyrota.dendriform.omega import omega_decompose
from pyrota.check.catalog import build_checks, SUITES
from pyrota.version import __version__

class PyRota:
  """
  Command line application: parses options into a Config, resolves a Session
  and dispatches to one of the subcommands in constants.COMMANDS.

  Args:
    argv (list): Arguments without the program name; defaults to sys.argv[1:].
    parse_args (bool): Set to False to configure the instance programmatically.
  """

  def __init__(self, argv=None, **kwargs):
    self.config = Config()
    self.register = CheckRegister()
    self.engine = CheckEngine(self.config)
    self.command = None
    self.arguments = []
    self.exec_only_list = []
    self.list_checks = False

    if kwargs.get('parse_args', True):
      self.parse_args(sys.argv[1:] if argv is None else argv)

  @property
  def version(self):
    return __version__

  @property
  def serde(self):
    return serde.serde_for(self.config['format'])

  def parse_args(self, argv):
    opt_list = 'n:o:dhv'
    longopt_list = [
      'help', 'version', 'debug', 'silent', 'list',
      'base=', 'gens=', 'product=', 'theta=', 'case=',
      'max-len=', 'random-len=', 'random-samples=',
      'order=', 'order-cap=', 'seed=', 'format=', 'engine=',
      'max-procs=', 'log-file=', 'output=', 'only='
    ]

    try:
      opts, args = getopt.gnu_getopt(argv, opt_list, longopt_list)
    except getopt.GetoptError as e:
      raise UsageError(str(e))

    for opt, arg in opts:
      if opt in ['-h', '--help']:
        self.show_help()
        sys.exit(0)
      elif opt in ['-v', '--version']:
        print('PyRota v{}'.format(__version__))
        sys.exit(0)
      elif opt in ['-d', '--debug']:
        self.config['debug'] = True
      elif opt == '--silent':
        self.config['silent'] = True
      elif opt == '--list':
        self.list_checks = True
      elif opt in ['-n', '--max-procs']:
        self.config['max_procs'] = arg
      elif opt in ['-o', '--output']:
        self.config['output'] = arg
      elif opt == '--only':
        self.exec_only_list = [ x.strip() for x in arg.split(',') if x.strip() ]
      elif opt.startswith('--') and opt[2:].replace('-', '_') in self.config:
        self.config[opt[2:].replace('-', '_')] = arg
      else:
        raise ValueError('Error during parsing of opts')

    if not args:
      raise UsageError('No command given (expected one of {})'.format(', '.join(constants.COMMANDS)))
    if args[0] not in constants.COMMANDS:
      raise UsageError('Unknown command "{}" (expected one of {})'.format(args[0], ', '.join(constants.COMMANDS)))
    self.command = args[0]
    self.arguments = args[1:]

  def show_help(self):
    print("Usage: pyrota [options] <command> [arguments]")
    print("")
    print("Commands:")
    print("   eval <expr> ...                       Evaluate expressions (read from STDIN when none are given).")
    print("   check [suite ...]                     Run check suites: {}, {}.".format(constants.SUITE_ALL, ', '.join(SUITES)))
    print("   spitzer [expr]                        Verify Spitzer's identity for a (default: the first generator).")
    print("   primitives [D]                        Basis of the primitive elements spanned by words of degree <= D (default 3).")
    print("   decompose <expr>                      Write a qone basis word as a prec1/dot1 expression.")
    print("")
    print("Options:")
    print("        --base <comm|noncomm>            Base algebra mode.")
    print("        --gens <declarations>            Comma separated generators, e.g. h:primitive,g:grouplike,a~b.")
    print("        --product <sh|qsh|rsh|lsh>       Product kind. Suites check P_A on this product only.")
    print("        --theta <rational>               Weight of the quasi-shuffle.")
    print("        --case <1|2>                     Bialgebra construction used by delta, eps and primitives.")
    print("        --max-len <num>                  Exhaustive sampling bound on word length.")
    print("        --random-len <num>               Word length bound for random samples.")
    print("        --random-samples <num>           Number of random samples per check.")
    print("        --order <num>                    Spitzer truncation order.")
    print("        --order-cap <num>                Largest accepted Spitzer order and primitive bound.")
    print("        --seed <num>                     Seed for every random choice.")
    print("        --format <text|json>             Output format.")
    print("        --engine <name>                  Shuffle engine, recursive or combinatorial.")
    print("   -n,  --max-procs <num>                Number of worker processes for check suites.")
    print("        --log-file <path>                Write the progress log to this file.")
    print("   -o,  --output <path>                  Write command output to this file instead of STDOUT.")
    print("        --only <comma separated names>   Run only the named checks (a name prefix selects a group).")
    print("        --list                           List the checks of the selected suites instead of running them.")
    print("        --silent                         Suppress the summary line.")
    print("   -d,  --debug                          Print the resolved configuration before running.")
    print("   -v,  --version                        Print version and exit.")
    print("   -h,  --help                           Show this help and exit.")
    print("")
    print("Every option can also be set through its ROTA_* environment variable, e.g. ROTA_THETA=1/3.")

  def execute(self):
    return self.run()

  def run(self):
    if self.config['debug']:
      self.config.print_attributes()

    # Prepare engine
    self.engine.config = self.config
    self.engine.logger = FileLogger(self.config['log_file'])

    session = Session.from_config(self.config)
    handler = getattr(self, '_cmd_{}'.format(self.command))
    return handler(session)

  def write(self, values):
    """
    Sends values to the output file when one is configured, else to STDOUT.
    """
    if self.config['output']:
      self.serde.save_to_file(self.config['output'], values)
    else:
      for value in values:
        print(self.serde.serialize(value))

  def _cmd_eval(self, session):
    sources = self.arguments or [ line for line in sys.stdin.read().splitlines() if line.strip() ]
    evaluator = Evaluator(session)
    self.write([ evaluator.evaluate_source(src) for src in sources ])
    return constants.EXIT_SUCCESS

  def _cmd_check(self, session):
    self.register.add_checks(build_checks(session, self.arguments))
    if self.exec_only_list:
      self.register.exec_only(self.exec_only_list)

    if self.list_checks:
      for check in self.register.pending_checks:
        print(check.name)
      return constants.EXIT_SUCCESS

    reports = []
    streaming = not self.config['output']
    def emit(check, report):
      reports.append(report)
      if streaming:
        print(self.serde.serialize(report), flush=True)

    failed = self.engine.initiate(self.register, emit)
    if not streaming:
      self.write(reports)

    if not self.config['silent'] and self.config['format'] == 'text':
      print('{} checks, {} as expected, {} unexpected'.format(len(reports), len(reports) - failed, failed))

    return constants.EXIT_FAILURE if failed else constants.EXIT_SUCCESS

  def _cmd_spitzer(self, session):
    if len(self.arguments) > 1:
      raise UsageError('spitzer takes at most one expression')
    if self.arguments:
      evaluator = Evaluator(session)
      a = evaluator.as_tensor(evaluator.evaluate_source(self.arguments[0]), 'spitzer')
    else:
      algebra = session.algebra
      a = TensorElement.from_word((algebra.monomial(algebra.names[0]),), plus=True)
    report = spitzer_verify(session.theta, a, session.order, session.order_cap, session.engine)
    self.write([report])
    return constants.EXIT_SUCCESS if report.ok else constants.EXIT_FAILURE

  def _cmd_primitives(self, session):
    if len(self.arguments) > 1:
      raise UsageError('primitives takes at most one bound')
    bound = int(self.arguments[0]) if self.arguments else 3
    basis = primitives_at_bound(session.case, session.kind, bound, session.algebra, session.order_cap)
    self.write(basis or [TensorElement.zero(session.mode, plus=True)])
    return constants.EXIT_SUCCESS

  def _cmd_decompose(self, session):
    if len(self.arguments) != 1:
      raise UsageError('decompose takes exactly one word')
    evaluator = Evaluator(session)
    word = evaluator.as_tensor(evaluator.evaluate_source(self.arguments[0]), 'decompose')
    self.write([omega_decompose(word)])
    return constants.EXIT_SUCCESS
