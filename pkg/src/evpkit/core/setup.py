import logging
from typing import Any, Sequence

import click

from evpkit.core.config import EnvironmentOption, EnvironmentSettings, LoggingSettings
from evpkit.core.exceptions import EXIT_SEMANTIC_FAILURE, CustomException
from evpkit.core.logger import configure_logging
from evpkit.version import __description__, __title__, __version__

logger = logging.getLogger(__name__)


def echo_issues(report: Any) -> None:
    for issue in report.issues:
        click.echo(f"  {issue.path}: {issue.message}", err=True)


class EvpkitGroup(click.Group):
    """Command group that turns library exceptions into the stable exit codes."""

    log_tracebacks: bool = True

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except CustomException as exc:
            click.echo(f"error: {exc.detail}", err=True)
            report = getattr(exc, "report", None)
            if report is not None:
                echo_issues(report)
            ctx.exit(exc.exit_code)
        except ArithmeticError as exc:
            # a broken postcondition inside a solver, never a property of the input
            logger.debug("internal error in %s", ctx.invoked_subcommand, exc_info=self.log_tracebacks)
            click.echo(f"internal error: {exc}", err=True)
            ctx.exit(EXIT_SEMANTIC_FAILURE)


def create_application(
    commands: Sequence[click.Command],
    settings: LoggingSettings | EnvironmentSettings,
) -> click.Group:
    """Build the `evpkit` command group.

    Logging is configured from `settings` when the group runs, so importing the CLI has no
    side effects. Outside production, tracebacks of internal errors are logged at DEBUG.
    """

    @click.group(name=__title__, cls=EvpkitGroup, help=__description__)
    @click.version_option(__version__, prog_name=__title__)
    def application() -> None:
        if isinstance(settings, LoggingSettings):
            configure_logging(settings)
        if isinstance(settings, EnvironmentSettings) and settings.ENVIRONMENT != EnvironmentOption.PRODUCTION:
            logger.debug("running in %s mode", settings.ENVIRONMENT.value)

    if isinstance(application, EvpkitGroup) and isinstance(settings, EnvironmentSettings):
        application.log_tracebacks = settings.ENVIRONMENT != EnvironmentOption.PRODUCTION
    for command in commands:
        application.add_command(command)
    return application
