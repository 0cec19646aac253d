"""
Configuration des logs de la ligne de commande

Les résultats (JSON, CSV) partent sur stdout ; les logs sur stderr.
"""
import logging
import sys

from config.settings import CLI_CONFIG


def setup_logging(verbose: bool = False) -> None:
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format=CLI_CONFIG["log_format"],
        stream=sys.stderr,
        force=True,
    )
