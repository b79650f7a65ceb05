""" Structures """

from melonet.struct import score
from melonet.struct import network
from melonet.struct import smallworld
from melonet.struct import metrics
from melonet.struct import community
from melonet.struct import corpus
from melonet.struct import config

__all__ = ['score', 'network', 'smallworld', 'metrics', 'community', 'corpus', 'config']
