""" melonet """

from melonet.cli import melonet

__all__ = ['melonet']
