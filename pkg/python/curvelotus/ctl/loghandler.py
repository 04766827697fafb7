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

import logging
import time

GREEN = "\x1b[32m"
YELLOW = "\x1b[33m"
REDB = "\x1b[1;31m"
ORANGE = "\x1b[38;5;208m"
RESET = "\x1b[0m"

LEVEL_COLOURS = {
    "ERROR": (REDB, REDB),
    "CRITICAL": (REDB, REDB),
    "WARNING": (ORANGE, ORANGE),
}


class ColourLogHandler(logging.StreamHandler):
    """Stream handler writing ``time - <Level> -- message`` in colour."""

    @staticmethod
    def format_time(record):
        local_time = time.localtime(record.created)
        return "%d/%d/%d -- %02d:%02d:%02d" % (local_time.tm_mday,
                                               local_time.tm_mon,
                                               local_time.tm_year,
                                               local_time.tm_hour,
                                               local_time.tm_min,
                                               local_time.tm_sec)

    def emit(self, record):
        if record.levelno < self.level:
            return
        level_prefix, message_prefix = LEVEL_COLOURS.get(record.levelname, (YELLOW, ""))
        self.stream.write("%s%s%s - <%s%s%s> -- %s%s%s\n" % (
            GREEN,
            self.format_time(record),
            RESET,
            level_prefix,
            record.levelname.title(),
            RESET,
            message_prefix,
            record.getMessage(),
            RESET))
        self.flush()
