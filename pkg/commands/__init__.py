import click  # noqa: D104

from commands.count_command import count_cmd
from commands.eval_command import eval_cmd
from commands.localize_command import localize_cmd
from commands.sweep_command import sweep_cmd
from commands.verify_command import verify_cmd


def register_commands(cli: click.Group):
    """Register all subcommands with the command group."""
    cli.add_command(eval_cmd)
    cli.add_command(verify_cmd)
    cli.add_command(count_cmd)
    cli.add_command(localize_cmd)
    cli.add_command(sweep_cmd)
