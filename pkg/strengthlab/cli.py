import argparse
import logging
import signal
import sys
import time
from abc import ABC, abstractmethod
from typing import Any, Callable, Dict, List, Optional

from pydantic import BaseModel

from strengthlab.bounds import bounds_table, f_max, f_value_rows, sigma_ranges
from strengthlab.config import OUTPUT_FORMATS, StrengthLabConfig
from strengthlab.config_parser import ConfigurationManager
from strengthlab.enumeration import KNOWN_CLASS_COUNTS, enumerate_partitioned, iter_graph6
from strengthlab.exceptions import (
    BudgetError,
    CursorError,
    EmptyGraphError,
    GraphError,
    InsufficientDataError,
    SearchInterrupted,
    VerificationError,
)
from strengthlab.formatters import render_table
from strengthlab.fs import FileSystemService
from strengthlab.graph import Graph, complement, min_degree
from strengthlab.models import (
    EmptyGraphReport,
    FMaxReport,
    RamseyRecord,
    StrengthReport,
)
from strengthlab.parsers import graph6_decode, graph6_encode, parse_edge_list
from strengthlab.presets import PresetManager
from strengthlab.ramsey import describe_family, ramsey_fk, small_ramsey_rows
from strengthlab.services import ShardedSearchService
from strengthlab.strength import (
    max_fk_subgraph,
    strength,
    strength_bruteforce,
    strength_lower_bound,
    strength_upper_bound_beta,
    strength_value,
)
from strengthlab.verify import SUITES, run_suites

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_VERIFICATION = 4
EXIT_EMPTY_GRAPH = 5
EXIT_INTERRUPTED = 130

# above this order a full walk is days of work; say so before starting
SLOW_ORDER = 11


class BaseCLI(ABC):
    """Front end for long enumerations that can be stopped between rounds.

    The first SIGINT or SIGTERM only raises ``shutdown_requested``; searches
    poll it after each round, save their checkpoint and stop. A second signal
    exits at once.
    """

    def __init__(
        self,
        fs_service: FileSystemService,
        logger: Optional[logging.Logger] = None,
    ) -> None:
        self.fs_service = fs_service
        self.logger = logger or logging.getLogger('strengthlab')
        self._shutdown_requested = False
        self._setup_signal_handlers()

    def _setup_signal_handlers(self) -> None:
        for signum in (signal.SIGINT, signal.SIGTERM):
            signal.signal(signum, self._request_stop)

    def _request_stop(self, signum: int, frame) -> None:
        name = signal.Signals(signum).name
        if self._shutdown_requested:
            self.logger.warning(f'{name} again, exiting without saving the current round')
            sys.exit(EXIT_INTERRUPTED)
        self.logger.info(f'{name} received, the search stops after its round is checkpointed')
        self._shutdown_requested = True

    @property
    def shutdown_requested(self) -> bool:
        return self._shutdown_requested

    @abstractmethod
    def create_parser(self) -> argparse.ArgumentParser:
        pass

    def validate_args(self, args: Dict[str, Any]) -> None:
        """Reject values argparse cannot check on its own"""

    def parse_args(self, args: Optional[List[str]] = None) -> Dict[str, Any]:
        args = vars(self.create_parser().parse_args(args))
        self.validate_args(args)
        return args

    @abstractmethod
    def run(self, args: Optional[List[str]] = None) -> int:
        pass


class StrengthLabCLI(BaseCLI):
    """Subcommands for strength, Ramsey searches, f(n), tables and verification"""

    def create_parser(self) -> argparse.ArgumentParser:
        def on_error(message):
            raise argparse.ArgumentTypeError(message)

        common = argparse.ArgumentParser(add_help=False)
        common.add_argument('--config', help='YAML configuration file')
        common.add_argument(
            '--preset', choices=PresetManager.names(), help='Named search budget'
        )
        common.add_argument(
            '-v', '--verbose', action='store_true', default=None, help='Enable debug output'
        )
        common.add_argument('-o', '--output', help='Write results to this file instead of stdout')
        common.add_argument(
            '-f', '--format', dest='output_format', choices=OUTPUT_FORMATS, help='Output format'
        )
        common.add_argument('-j', '--threads', type=int, help='Worker processes')
        common.add_argument('--checkpoint', help='Checkpoint file for resumable searches')
        common.add_argument(
            '--timing', action='store_true', help='Include elapsed seconds in the output'
        )

        parser = argparse.ArgumentParser(
            prog='strengthlab',
            description='Graph strength, small r(F_s, F_t) and bounds on str(G) + str(Ḡ)',
        )
        parser.error = on_error
        commands = parser.add_subparsers(dest='command', required=True)

        strength_parser = commands.add_parser(
            'strength', parents=[common], help='Strength of a graph and its complement'
        )
        source = strength_parser.add_mutually_exclusive_group(required=True)
        source.add_argument('--graph6', help='Graph in graph6')
        source.add_argument('--edges', help='Edge list "n;u v;u v" with 1-based vertices')
        strength_parser.add_argument(
            '--method',
            choices=('fk', 'brute-force', 'both'),
            default='fk',
            help='Characterization, exhaustive search, or both compared',
        )
        strength_parser.add_argument(
            '--allow-empty-report',
            action='store_true',
            help='Report an edgeless graph instead of failing',
        )

        ramsey_parser = commands.add_parser(
            'ramsey', parents=[common], help='Search for r(F_s, F_t)'
        )
        ramsey_parser.add_argument('--s', type=int, required=True)
        ramsey_parser.add_argument('--t', type=int, required=True)
        ramsey_parser.add_argument(
            '--max-n', type=int, default=8, help='Largest order to enumerate'
        )

        fmax_parser = commands.add_parser(
            'fmax', parents=[common], help='f(n) by exhaustive enumeration'
        )
        fmax_parser.add_argument('--n', type=int, required=True)
        fmax_parser.add_argument(
            '--witnesses', action='store_true', help='Name the witness families'
        )

        tables_parser = commands.add_parser(
            'tables', parents=[common], help='Reproduce a published table'
        )
        tables_parser.add_argument('--which', type=int, choices=(1, 2, 3, 4), required=True)
        tables_parser.add_argument('--from', dest='n_from', type=int, default=3)
        tables_parser.add_argument('--to', dest='n_to', type=int)

        verify_parser = commands.add_parser(
            'verify', parents=[common], help='Run verification suites'
        )
        verify_parser.add_argument(
            '--suite', choices=('all',) + tuple(SUITES), default='all'
        )
        verify_parser.add_argument('--max-order', type=int)

        enumerate_parser = commands.add_parser(
            'enumerate', parents=[common], help='Non-isomorphic graphs of one order'
        )
        enumerate_parser.add_argument('--n', type=int, required=True)
        enumerate_parser.add_argument(
            '--count', action='store_true', help='Print the class count instead of graph6 lines'
        )
        enumerate_parser.add_argument('--shard', type=int, default=0)
        enumerate_parser.add_argument('--shard-count', type=int, default=1)

        for sub in commands.choices.values():
            sub.error = on_error
        return parser

    def validate_args(self, args: Dict[str, Any]) -> None:
        threads = args.get('threads')
        if threads is not None and threads < 1:
            raise argparse.ArgumentTypeError('--threads must be positive')

    def resolve_config(self, args: Dict[str, Any]) -> StrengthLabConfig:
        """CLI flags over the YAML file over the preset over the environment"""
        options = ConfigurationManager().load_options(args.get('config'))

        budget = {}
        if args.get('preset'):
            budget.update(PresetManager.get_options(args['preset']))
        budget.update(options.get('budget') or {})

        run = dict(options.get('run') or {})
        overrides = {
            'workers': args.get('threads'),
            'checkpoint_path': args.get('checkpoint'),
            'output_format': args.get('output_format'),
            'verbose': args.get('verbose'),
        }
        run.update({key: value for key, value in overrides.items() if value is not None})

        return StrengthLabConfig.create(budget=budget, run=run)

    def configure_logging(self, verbose: bool) -> None:
        self.logger.setLevel(logging.DEBUG if verbose else logging.INFO)

    def _emit(self, text: str, output: Optional[str]) -> None:
        if output:
            self.fs_service.write_file(output, text)
            self.logger.info(f'Results written to {output}')
        else:
            sys.stdout.write(text)
            sys.stdout.flush()

    def _render_records(
        self, records: List[BaseModel], config: StrengthLabConfig, timing: bool
    ) -> str:
        exclude = None if timing else {'elapsed'}
        if config.run.output_format == 'json':
            if len(records) == 1:
                return records[0].model_dump_json(indent=2, exclude=exclude) + '\n'
            dumped = [record.model_dump(mode='json', exclude=exclude) for record in records]
            return render_table(list(dumped[0]), dumped, 'json')

        rows = [record.model_dump(mode='json', exclude=exclude) for record in records]
        return render_table(list(rows[0]), rows, config.run.output_format)

    def _service(self, config: StrengthLabConfig) -> ShardedSearchService:
        return ShardedSearchService.from_config(
            config.run,
            fs_service=self.fs_service,
            stop_requested=lambda: self.shutdown_requested,
            logger=self.logger,
        )

    def _warn_slow(self, n: int) -> None:
        if n >= SLOW_ORDER and n in KNOWN_CLASS_COUNTS:
            self.logger.warning(
                f'Order {n} has {KNOWN_CLASS_COUNTS[n]} isomorphism classes; '
                'expect a very long run'
            )

    def _read_graph(self, args: Dict[str, Any]) -> Graph:
        if args.get('graph6'):
            return graph6_decode(args['graph6'])
        return parse_edge_list(args['edges'])

    def cmd_strength(self, args: Dict[str, Any], config: StrengthLabConfig) -> str:
        graph = self._read_graph(args)
        graph6 = graph6_encode(graph).decode('ascii')
        co = complement(graph)

        if graph.is_empty():
            if not args.get('allow_empty_report'):
                raise EmptyGraphError(
                    'Graph has no edges, so its strength is undefined '
                    '(pass --allow-empty-report to report it anyway)'
                )
            report = EmptyGraphReport(
                graph6=graph6,
                order=graph.order,
                complement_strength=None if co.is_empty() else strength_value(co),
            )
            return self._render_records([report], config, False)

        budget = config.budget
        method = args.get('method', 'fk')
        solve: Callable = strength_bruteforce if method == 'brute-force' else strength
        result = solve(graph, budget)
        co_result = None if co.is_empty() else solve(co, budget)

        brute = None
        if method == 'both':
            brute = strength_bruteforce(graph, budget).value
            if brute != result.value:
                self.logger.warning(
                    f'Characterization gives {result.value}, brute force gives {brute}'
                )

        report = StrengthReport(
            graph6=graph6,
            order=graph.order,
            size=graph.size,
            strength=result.value,
            witness=list(result.witness_numbering.labels),
            method=result.method,
            witness_source=result.witness_source,
            max_fk_in_complement=result.max_fk_in_complement or max_fk_subgraph(co),
            complement_strength=None if co_result is None else co_result.value,
            complement_witness=(
                None if co_result is None else list(co_result.witness_numbering.labels)
            ),
            lower_bound=strength_lower_bound(graph) if min_degree(graph) >= 1 else None,
            upper_bound=strength_upper_bound_beta(graph),
            brute_force_strength=brute,
            agreement=None if brute is None else brute == result.value,
        )
        return self._render_records([report], config, False)

    def cmd_ramsey(self, args: Dict[str, Any], config: StrengthLabConfig, timing: bool) -> str:
        self._warn_slow(args['max_n'])
        started = time.monotonic()
        result = ramsey_fk(args['s'], args['t'], args['max_n'], config.budget, self._service(config))
        witness = result.witness
        record = RamseyRecord(
            s=result.s,
            t=result.t,
            status=result.status,
            value=result.value,
            lower=result.lower,
            upper=result.upper,
            witness_graph6=None if witness is None else graph6_encode(witness).decode('ascii'),
            witness_family=None if witness is None else describe_family(witness),
            classes_examined=result.work,
            reference=result.reference,
            elapsed=round(time.monotonic() - started, 3),
        )
        return self._render_records([record], config, timing)

    def cmd_fmax(self, args: Dict[str, Any], config: StrengthLabConfig, timing: bool) -> str:
        self._warn_slow(args['n'])
        started = time.monotonic()
        result = f_max(args['n'], config.budget, self._service(config))
        first, second = result.witness
        witnesses = args.get('witnesses')
        report = FMaxReport(
            n=result.n,
            value=result.value,
            witness_graph6=graph6_encode(first).decode('ascii'),
            complement_graph6=graph6_encode(second).decode('ascii'),
            witness_family=describe_family(first) if witnesses else None,
            complement_family=describe_family(second) if witnesses else None,
            classes_examined=result.work,
            elapsed=round(time.monotonic() - started, 3),
        )
        return self._render_records([report], config, timing)

    def cmd_tables(self, args: Dict[str, Any], config: StrengthLabConfig) -> str:
        which = args['which']
        output_format = config.run.output_format
        if which == 1:
            return render_table(('s', 't', 'value'), small_ramsey_rows(), output_format)

        if which == 2:
            rows = f_value_rows(args.get('n_to') or 12, config.budget, self._service(config))
            return render_table(('n', 'f', 'reason'), rows, output_format)

        if which == 3:
            rows = [
                {
                    'n': f'[{r.n_from}, {r.n_to}]',
                    'sigma': r.sigma,
                    'reason': f'r({r.reason[0]}, {r.reason[1]}) = {r.reason[2]}',
                }
                for r in sigma_ranges()
            ]
            return render_table(('n', 'sigma', 'reason'), rows, output_format)

        table = bounds_table(
            args.get('n_from') or 3, args.get('n_to') or 35, config.budget, self._service(config)
        )
        rows = [
            {
                'n': row.n,
                'rho': row.rho,
                'rho_prime': row.rho_prime,
                'upper': row.upper,
                'f': row.f_exact,
                'source': row.f_source,
            }
            for row in table
        ]
        return render_table(('n', 'rho', 'rho_prime', 'upper', 'f', 'source'), rows, output_format)

    def cmd_verify(self, args: Dict[str, Any], config: StrengthLabConfig) -> str:
        reports = run_suites(
            args['suite'], args.get('max_order'), config.budget, self._service(config), self.logger
        )
        text = self._render_records(reports, config, False)
        failed = [report for report in reports if not report.passed]
        if failed:
            # results first, then the non-zero exit
            self._emit(text, args.get('output'))
            failures = [message for report in failed for message in report.failures]
            raise VerificationError(
                f'{len(failures)} check(s) failed in {", ".join(r.suite for r in failed)}',
                failures,
            )
        return text

    def cmd_enumerate(self, args: Dict[str, Any], config: StrengthLabConfig) -> str:
        n = args['n']
        if n > config.budget.max_enum_order:
            raise BudgetError(
                f'Enumeration budget is order {config.budget.max_enum_order}, got {n}'
            )
        self._warn_slow(n)
        shard, shard_count = args['shard'], args['shard_count']
        if args.get('count'):
            count = enumerate_partitioned(n, shard, shard_count, lambda graph: None)
            rows = [{'n': n, 'shard': shard, 'shard_count': shard_count, 'classes': count}]
            return render_table(('n', 'shard', 'shard_count', 'classes'), rows, config.run.output_format)
        return b''.join(iter_graph6(n, shard, shard_count)).decode('ascii')

    def dispatch(self, args: Dict[str, Any], config: StrengthLabConfig) -> Optional[str]:
        command = args['command']
        timing = bool(args.get('timing'))
        if command == 'strength':
            return self.cmd_strength(args, config)
        if command == 'ramsey':
            return self.cmd_ramsey(args, config, timing)
        if command == 'fmax':
            return self.cmd_fmax(args, config, timing)
        if command == 'tables':
            return self.cmd_tables(args, config)
        if command == 'verify':
            return self.cmd_verify(args, config)
        return self.cmd_enumerate(args, config)

    def run(self, args: Optional[List[str]] = None) -> int:
        try:
            raw_args = self.parse_args(args)
            config = self.resolve_config(raw_args)
            self.configure_logging(config.run.verbose)
            self.logger.debug(f'Running {raw_args["command"]} with {config.run!r}')

            text = self.dispatch(raw_args, config)
            self._emit(text, raw_args.get('output'))
            return EXIT_OK

        except argparse.ArgumentTypeError as e:
            self.logger.error(f'Bad arguments: {e}')
            return EXIT_INPUT
        except (GraphError, CursorError) as e:
            self.logger.error(f'Rejected graph or cursor input: {e}')
            return EXIT_INPUT
        except EmptyGraphError as e:
            self.logger.error(str(e))
            return EXIT_EMPTY_GRAPH
        except (BudgetError, InsufficientDataError) as e:
            self.logger.error(str(e))
            return EXIT_BUDGET
        except VerificationError as e:
            for failure in e.failures:
                self.logger.error(f'  | {failure}')
            self.logger.error(str(e))
            return EXIT_VERIFICATION
        except SearchInterrupted as e:
            self.logger.warning(str(e))
            return EXIT_INTERRUPTED
        except (ValueError, FileNotFoundError) as e:
            self.logger.error(f'Rejected configuration: {e}')
            return EXIT_INPUT
        except Exception as e:
            self.logger.exception(f'Search aborted by an unexpected error: {e}')
            return EXIT_UNEXPECTED


def main() -> int:
    return StrengthLabCLI(FileSystemService()).run()


if __name__ == '__main__':
    sys.exit(main())
