""" Configuration layer """

from melonet.dal import path
from melonet.dal import settings

__all__ = ['path', 'settings']
