from modules.util.exceptions.domain_exception import DomainException


class CutoffExceededException(DomainException):
    pass
