from .app import cli
