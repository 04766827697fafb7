# Copyright (C) 2026 The curvelotus authors
#
# You can copy, redistribute or modify this Program under the terms of
# the GNU General Public License version 2 as published by the Free
# Software Foundation.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# version 2 along with this program; if not, write to the Free Software
# Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston, MA
# 02110-1301, USA.


class CurveLotusException(Exception):
    """
    Generic class for curvelotus exceptions
    """
    def __init__(self, value):
        super(CurveLotusException, self).__init__(value)
        self.value = value

    def __str__(self):
        return str(self.value)


class ParseError(CurveLotusException):
    """
    Exception raised when a series, a support or a curve file is malformed
    """


class DomainError(CurveLotusException):
    """
    Exception raised when an operation is called outside of its domain
    """


class DuplicateBranchError(DomainError):
    """
    Exception raised when two inputs describe the same branch
    """


class UnsupportedCoefficientError(DomainError):
    """
    Exception raised when a coefficient cannot be handled exactly
    """


class InvariantViolation(CurveLotusException):
    """
    Exception raised when a computed object fails one of its own checks
    """
