from ravel.logging import ConsoleLoggerInterface

from .constants import TROMAN_CONSOLE_LOG_LEVEL


logger = ConsoleLoggerInterface(
    'troman', level=TROMAN_CONSOLE_LOG_LEVEL
)
