# SPDX-License-Identifier: Apache-2.0

import sys
import traceback

import pyrota.core.constants as constants
from pyrota.core.errors import RotaError
from pyrota.core.pyrota import PyRota

def main(argv=None):
  exit_status = constants.EXIT_SUCCESS
  
  try:
    app = PyRota(argv)
    exit_status = app.execute()
  except RotaError as rota_error:
    exit_status = constants.EXIT_USAGE
    print(str(rota_error), file=sys.stderr)
    print('Exiting with code {}'.format(exit_status), file=sys.stderr)
  
  except ValueError as value_error:
    exit_status = constants.EXIT_USAGE
    print(str(value_error), file=sys.stderr)
    print(traceback.format_exc(), file=sys.stderr)
    print('Exiting with code {}'.format(exit_status), file=sys.stderr)
  
  except KeyboardInterrupt:
    exit_status = constants.EXIT_INTERRUPT
    print('\nAborting', file=sys.stderr)
  
  except Exception as generic_error:
    exit_status = constants.EXIT_UNKNOWN
    print('Unknown Exception', file=sys.stderr)
    print(str(generic_error), file=sys.stderr)
    print(traceback.format_exc(), file=sys.stderr)
    print('Exiting with code {}'.format(exit_status), file=sys.stderr)
  
  sys.exit(exit_status)

if __name__ == '__main__':
  main()
