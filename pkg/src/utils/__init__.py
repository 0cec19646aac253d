from .log_config import setup_logging
from .parallel import parallel_map

__all__ = ['setup_logging', 'parallel_map']
