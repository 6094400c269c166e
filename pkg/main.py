"""
flagrep - Main Entry Point

Exact computations with root systems, Weyl groups, highest weight
representations and Borel-Weil-Bott cohomology of line bundles on flag
varieties, plus the SU(1,1) orbit duality example.
"""
import logging
import sys

from config import Config

logger = logging.getLogger("flagrep")


def main(argv=None) -> int:
    """Main entry point for the CLI."""
    # Configure logging; stdout is reserved for results
    logging.basicConfig(
        level=Config.LOG_LEVEL.upper(),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )

    try:
        Config.validate()
    except ValueError as e:
        logger.error(f"Configuration error: {e}")
        return 2

    from cli.app import FlagrepCLI

    try:
        return FlagrepCLI().main(sys.argv[1:] if argv is None else argv)
    except Exception as e:
        logger.error(f"Fatal error: {e}")
        raise


if __name__ == "__main__":
    sys.exit(main())
