from modules.util.exceptions.domain_exception import DomainException


class TableConsistencyException(DomainException):
    pass
