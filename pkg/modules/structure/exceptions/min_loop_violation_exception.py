from modules.util.exceptions.domain_exception import DomainException


class MinLoopViolationException(DomainException):
    pass
