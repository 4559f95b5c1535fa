from evpkit.cli import commands
from evpkit.core.config import settings
from evpkit.core.setup import create_application

cli = create_application(commands=commands, settings=settings)

if __name__ == "__main__":
    cli()
