# SPDX-License-Identifier: Apache-2.0

from pyrota.serde.abstract import SerDe
from pyrota.serde.json import JsonSerDe
from pyrota.serde.text import TextSerDe

SERDES = {
  'text': TextSerDe,
  'json': JsonSerDe
}

def serde_for(output_format):
  return SERDES[output_format]()
