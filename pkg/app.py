import logging

import click

from commands import register_commands
from config import get_config
from services.const import APP_VERSION


def create_app(config_object=None) -> click.Group:
    # App Factory
    if config_object is None:
        config_object = get_config()

    @click.group(context_settings={"help_option_names": ["-h", "--help"]})
    @click.version_option(APP_VERSION, prog_name="effnum")
    @click.pass_context
    def cli(ctx: click.Context) -> None:
        """Effective numbers of weighted objects, states and lattices."""
        ctx.obj = config_object

    register_commands(cli)
    logging.basicConfig(level=getattr(logging, config_object.LOG_LEVEL))
    return cli


cli = create_app()

if __name__ == "__main__":
    cli()
