#!/usr/bin/env python
#
# This file is part of capitula, and is free software, distributed under the
# terms of the GNU Lesser General Public License Version 3, or any later
# version.
# See the COPYING file included in this archive

import os, sys

if sys.version_info < (3, 7):
    sys.stderr.write('capitula requires at least Python 3.7\n')
    sys.exit(3)

from setuptools import setup, find_packages, Command

class BuildAPIDocs(Command):
    """ setuptools Command to build documentation using pydoctor """
    description = "build html API documentation"
    user_options = []

    def initialize_options(self):
        pass

    def finalize_options(self):
        pass

    def run(self):
        try:
            from pydoctor.driver import main as pydoctor
        except ImportError:
            sys.stderr.write('pydoctor (https://github.com/twisted/pydoctor) needs to be '
                             'installed to build API documentation\n')
            sys.exit(3)
        else:
            print('Building capitula API documentation...')
            outputDir = '%s/doc/html' % os.path.abspath(os.path.dirname(__file__))
            pydoctor(['--project-name=capitula', '--docformat=epytext',
                      '--html-output=%s' % outputDir, 'capitula'])
            print('API documentation created in: %s' % outputDir)

setup(
      name='capitula',
      version='0.1',

      packages=find_packages(exclude=['tests']),
      test_suite='tests.runalltests.additional_tests',
      install_requires=['Twisted>=21.2.0', 'gmpy2>=2.1', 'mpmath>=1.2'],
      extras_require={'docs': ['pydoctor']},
      entry_points={'console_scripts': ['capitula = capitula.cli:run']},

      description='Capitulation of 2-classes of Q(sqrt(2p1p2), i) in its '
                  'unramified quadratic extensions',
      license='LGPLv3+',
      keywords="number theory capitulation class group units pell gaussian integers",

      long_description='capitula computes, for primes p1 = p2 = 1 (mod 4), the '
                       'fundamental units of the quadratic subfields of the genus '
                       'field of k = Q(sqrt(2p1p2), i), fundamental systems of units '
                       'of the three unramified quadratic extensions of k, the '
                       'strongly ambiguous classes of k over Q(i) and the classes '
                       'that capitulate in each extension. A command line tool '
                       'renders per-pair reports, regenerates example tables and '
                       'scans ranges of primes.',
      classifiers=[
          'Development Status :: 3 - Alpha',
          'Intended Audience :: Science/Research',
          'License :: OSI Approved :: GNU Library or Lesser General Public License (LGPL)',
          'Operating System :: OS Independent',
          'Programming Language :: Python :: 3',
          'Topic :: Scientific/Engineering :: Mathematics',
          ],
      cmdclass={'build_apidocs': BuildAPIDocs}
)
